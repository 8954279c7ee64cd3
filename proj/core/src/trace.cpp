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

#include "affectnav/trace.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "affectnav/errors.hpp"

namespace affectnav {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

template <typename T, typename Parse>
T parse_flag(std::string_view key, std::string_view value, std::size_t column, Parse parse) {
    const auto v = parse(value);
    if (!v) {
        throw SyntaxError("invalid value '" + std::string(value) + "' for context flag '" + std::string(key) + "'",
                          column);
    }
    return *v;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

Utterance parse_utterance_line(std::string_view line) {
    Utterance u;
    const auto bar = line.find('|');
    u.frame = std::string(trim(line.substr(0, bar)));
    if (bar == std::string_view::npos) return u;

    std::size_t pos = bar + 1;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos >= line.size()) break;
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        const auto flag = trim(line.substr(start, pos - start));
        if (flag.empty()) continue;
        const auto eq = flag.find('=');
        if (eq == std::string_view::npos) throw SyntaxError("context flag must be key=value", start + 1);
        const auto key = flag.substr(0, eq);
        const auto value = flag.substr(eq + 1);
        auto& ctx = u.context;
        if (key == "agent") {
            ctx.agent = parse_flag<Party>(key, value, start + 1, party_from_name);
        } else if (key == "affected") {
            ctx.affected = parse_flag<Party>(key, value, start + 1, party_from_name);
        } else if (key == "desirability") {
            ctx.desirability_for_other = parse_flag<Desirability>(key, value, start + 1, desirability_from_name);
        } else if (key == "prospect") {
            ctx.prospect = parse_flag<Prospect>(key, value, start + 1, prospect_from_name);
        } else if (key == "approval") {
            ctx.approval = parse_flag<Approval>(key, value, start + 1, approval_from_name);
        } else {
            throw SyntaxError("unknown context flag '" + std::string(key) + "'", start + 1);
        }
    }
    return u;
}

std::string render_utterance_line(const Utterance& u) {
    std::string out = u.frame;
    const ElicitationContext defaults;
    std::string flags;
    const auto add = [&](std::string_view key, std::string_view value) {
        flags += ' ';
        flags += key;
        flags += '=';
        flags += value;
    };
    const auto& c = u.context;
    if (c.agent != defaults.agent) add("agent", party_name(c.agent));
    if (c.affected != defaults.affected) add("affected", party_name(c.affected));
    if (c.desirability_for_other != defaults.desirability_for_other) {
        add("desirability", desirability_name(c.desirability_for_other));
    }
    if (c.prospect != defaults.prospect) add("prospect", prospect_name(c.prospect));
    if (c.approval != defaults.approval) add("approval", approval_name(c.approval));
    if (!flags.empty()) out += " |" + flags;
    return out;
}

std::vector<TraceStep> parse_trace(std::istream& in) {
    std::vector<TraceStep> steps;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        TraceStep step;
        step.line = line_no;
        if (line.front() != '@') {
            step.kind = TraceStep::Kind::kUtterance;
            try {
                step.utterance = parse_utterance_line(line);
            } catch (const Error& e) {
                throw FormatError(e.what(), line_no);
            }
            steps.push_back(std::move(step));
            continue;
        }

        std::istringstream words{std::string(line)};
        std::string directive;
        words >> directive;
        if (directive == "@idle") {
            step.kind = TraceStep::Kind::kIdle;
        } else if (directive == "@start") {
            std::string name;
            words >> name;
            const auto s = mental_state_from_name(name);
            if (!s) throw FormatError("unknown mental state '" + name + "'", line_no);
            step.kind = TraceStep::Kind::kStart;
            step.start = *s;
        } else if (directive == "@groups") {
            std::array<double, kEmotionGroupCount> e{};
            for (auto& v : e) {
                std::string tok;
                if (!(words >> tok)) throw FormatError("@groups needs 9 values", line_no);
                const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
                    throw FormatError("invalid group strength '" + tok + "'", line_no);
                }
            }
            std::string extra;
            if (words >> extra) throw FormatError("@groups needs exactly 9 values", line_no);
            step.kind = TraceStep::Kind::kGroups;
            try {
                step.groups = GroupVector(e);
            } catch (const Error& err) {
                throw FormatError(err.what(), line_no);
            }
        } else {
            throw FormatError("unknown directive '" + directive + "'", line_no);
        }
        std::string extra;
        if (step.kind != TraceStep::Kind::kGroups && words >> extra) {
            throw FormatError("unexpected '" + extra + "' after " + directive, line_no);
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

std::vector<TraceRow> run_trace(const Engine& engine, SessionState& session, std::span<const TraceStep> steps) {
    std::vector<TraceRow> rows;
    for (const auto& step : steps) {
        TraceRow row;
        row.turn = rows.size() + 1;
        row.state_before = session.machine.current();
        switch (step.kind) {
        case TraceStep::Kind::kStart:
            session.machine.set_current(step.start);
            continue;
        case TraceStep::Kind::kIdle:
            row.kind = "idle";
            session.machine.idle_tick();
            break;
        case TraceStep::Kind::kGroups: {
            row.kind = "groups";
            try {
                row.group = engine.apply_stimulus(session, step.groups).group;
            } catch (const Error& e) {
                throw FormatError(e.what(), step.line);
            }
            const auto& v = step.groups.values();
            row.intensity = *std::max_element(v.begin(), v.end());
            break;
        }
        case TraceStep::Kind::kUtterance: {
            row.kind = "utterance";
            TurnReport report;
            try {
                report = engine.run_turn(session, step.utterance);
            } catch (const Error& e) {
                throw FormatError(e.what(), step.line);
            }
            row.group = report.chosen_group;
            row.valence = report.egc.valence;
            row.intensity = report.egc.intensity;
            break;
        }
        }
        row.state_after = session.machine.current();
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_trace_csv(std::span<const TraceRow> rows, std::ostream& out) {
    out << kTraceCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.turn << ',' << r.kind << ',' << mental_state_name(r.state_before) << ','
            << mental_state_name(r.state_after) << ',' << r.group << ',' << valence_name(r.valence) << ','
            << format_double(r.intensity) << '\n';
    }
}

} // namespace affectnav
