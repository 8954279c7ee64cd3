/*
 * Copyright 2026 The affectnav Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "affectnav/errors.hpp"
#include "affectnav/report.hpp"
#include "affectnav/trace.hpp"

namespace affectnav::cli {
namespace {

std::string fixed(double v, int digits = 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

void print_affect(const FeelingVector6& v, std::ostream& out) {
    for (std::size_t i = 0; i < kFeelingCount; ++i) {
        out << (i ? " " : "") << feeling_name(static_cast<Feeling>(i)) << '=' << fixed(v.values[i]);
    }
}

void print_report(const TurnReport& r, std::ostream& out) {
    out << "frame     " << r.utterance << '\n';
    out << "egc       (" << fixed(r.egc.vector.f1) << ", " << fixed(r.egc.vector.f2) << ", " << fixed(r.egc.vector.f3)
        << ")" << (r.egc.vector.used_beta ? " beta" : "") << "  area " << area_name(r.egc.area) << "  "
        << valence_name(r.egc.valence) << "  intensity " << fixed(r.egc.intensity) << '\n';
    out << "emotions ";
    if (r.emotions.empty()) out << " (none)";
    for (const auto& e : r.emotions) out << ' ' << emotion_name(e.type) << ':' << fixed(e.strength);
    out << '\n';
    out << "state     " << mental_state_name(r.previous_state) << " -> " << mental_state_name(r.new_state);
    if (r.chosen_group > 0) {
        out << "  (group " << r.chosen_group << ")";
    } else {
        out << "  (idle drift)";
    }
    out << '\n' << "affect    ";
    print_affect(r.affect, out);
    out << '\n';
    for (std::size_t i = 0; i < r.recommendations.size(); ++i) {
        out << "spot " << i + 1 << "    " << r.recommendations[i].spot.name << "  distance "
            << fixed(r.recommendations[i].profile_distance) << '\n';
    }
}

void print_error(const Error& e, std::ostream& out) { out << "error[" << e.code() << "]: " << e.what() << '\n'; }

} // namespace

int run_repl(const Engine& engine, std::istream& in, std::ostream& out, const ReplOptions& options) {
    SessionState session = engine.new_session("repl", options.persona);
    int failures = 0;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream words(line.substr(first));
        std::string head;
        words >> head;

        try {
            if (head == ":quit" || head == ":q") break;
            if (head == ":state") {
                if (options.json) {
                    out << session_state_json(session) << '\n';
                } else {
                    out << "state     " << mental_state_name(session.machine.current()) << "  turns "
                        << session.history.size() << "\naffect    ";
                    print_affect(session.affect.current, out);
                    out << '\n';
                }
            } else if (head == ":idle") {
                const auto before = session.machine.current();
                session.machine.idle_tick();
                out << "state     " << mental_state_name(before) << " -> "
                    << mental_state_name(session.machine.current()) << "  (idle drift)\n";
            } else if (head == ":recommend") {
                RankQuery q;
                double lat = 0.0;
                double lon = 0.0;
                if (words >> lat >> lon) {
                    q.here = GeoPoint{lat, lon};
                    double radius = 0.0;
                    if (words >> radius) q.radius_km = radius;
                }
                const auto ranked = engine.recommend(session.affect, q);
                if (options.json) {
                    out << ranked_spots_json(ranked) << '\n';
                } else {
                    for (std::size_t i = 0; i < ranked.size(); ++i) {
                        out << i + 1 << ". " << ranked[i].spot.name << "  distance "
                            << fixed(ranked[i].profile_distance);
                        if (ranked[i].km) out << "  " << fixed(*ranked[i].km, 1) << " km";
                        out << '\n';
                    }
                }
            } else if (head.starts_with(':')) {
                out << "unknown command " << head << '\n';
                ++failures;
            } else {
                const auto report = engine.run_turn(session, parse_utterance_line(line));
                if (options.json) {
                    out << turn_report_json(report) << '\n';
                } else {
                    print_report(report, out);
                }
            }
        } catch (const Error& e) {
            print_error(e, out);
            ++failures;
        }
    }
    return failures;
}

int run_eval(const Engine& engine, std::istream& trace, std::ostream& out, std::ostream& err,
             std::optional<std::string> persona) {
    try {
        const auto steps = parse_trace(trace);
        SessionState session = engine.new_session("trace", std::move(persona));
        const auto rows = run_trace(engine, session, steps);
        write_trace_csv(rows, out);
        return 0;
    } catch (const Error& e) {
        print_error(e, err);
        return 1;
    }
}

int inspect_transition(std::istream& in, std::ostream& out) {
    TransitionTable table;
    try {
        table = parse_transition_table(in);
    } catch (const Error& e) {
        print_error(e, out);
        return 1;
    }
    out << "from\\to ";
    for (const auto s : all_mental_states()) out << '\t' << mental_state_name(s);
    out << "\tsum\n";
    const auto sums = row_sums(table.values);
    int drift = 0;
    for (std::size_t i = 0; i < kMentalStateCount; ++i) {
        out << mental_state_name(static_cast<MentalState>(i));
        for (std::size_t j = 0; j < kMentalStateCount; ++j) out << '\t' << table.text[i][j];
        out << '\t' << fixed(sums[i]);
        if (std::abs(sums[i] - 1.0) > kRowSumTolerance) {
            out << "\tDRIFT";
            ++drift;
        }
        out << '\n';
    }
    if (drift > 0) {
        out << drift << " row(s) drift more than " << kRowSumTolerance << " from 1.0\n";
        return 1;
    }
    const auto model = seed_from_table(table.values);
    out << "\ncosts (1 - count/row total, " << kSeedPseudoCount << " pseudo-observations per row)\n";
    for (const auto from : all_mental_states()) {
        out << mental_state_name(from);
        for (const auto to : all_mental_states()) out << '\t' << fixed(model.cost(from, to));
        out << '\n';
    }
    return 0;
}

int inspect_groups(const GroupTargets& targets, std::ostream& out) {
    for (int k = 1; k <= static_cast<int>(kEmotionGroupCount); ++k) {
        out << k << "  -> " << mental_state_name(targets[static_cast<std::size_t>(k - 1)]) << "\t";
        bool first = true;
        for (const auto t : all_emotion_types()) {
            if (emotion_group(t) != k) continue;
            out << (first ? "" : ", ") << emotion_name(t);
            first = false;
        }
        out << '\n';
    }
    return 0;
}

int inspect_spots(std::istream& in, std::ostream& out) {
    try {
        const auto spots = parse_spot_catalog(in);
        for (const auto& s : spots) {
            out << s.name << "\t(" << fixed(s.location.lat, 4) << ", " << fixed(s.location.lon, 4) << ")\t";
            print_affect(s.profile, out);
            out << '\n';
        }
        out << spots.size() << " spot(s)\n";
        return 0;
    } catch (const Error& e) {
        print_error(e, out);
        return 1;
    }
}

int inspect_fv(std::istream& in, std::ostream& out) {
    try {
        const auto db = parse_fv(in);
        write_fv(db, out);
        out << db.size() << " record(s), " << db.personal_layers().size() << " persona layer(s)\n";
        return 0;
    } catch (const Error& e) {
        print_error(e, out);
        return 1;
    }
}

} // namespace affectnav::cli
