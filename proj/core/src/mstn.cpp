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

#include "affectnav/mstn.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "affectnav/errors.hpp"

namespace affectnav {
namespace {

constexpr std::array<std::string_view, kMentalStateCount> kStateNames{"happy", "quiet",  "sad",    "surprise",
                                                                      "angry", "fear",   "disgust"};

constexpr std::size_t idx(MentalState s) noexcept { return static_cast<std::size_t>(s); }

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string field;
    while (in >> field) out.push_back(field);
    return out;
}

} // namespace

const std::array<MentalState, kMentalStateCount>& all_mental_states() noexcept {
    static constexpr std::array<MentalState, kMentalStateCount> states{
        MentalState::kHappy, MentalState::kQuiet, MentalState::kSad,    MentalState::kSurprise,
        MentalState::kAngry, MentalState::kFear,  MentalState::kDisgust};
    return states;
}

std::string_view mental_state_name(MentalState s) noexcept { return kStateNames[idx(s)]; }

std::optional<MentalState> mental_state_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kStateNames.size(); ++i) {
        if (kStateNames[i] == name) return static_cast<MentalState>(i);
    }
    return std::nullopt;
}

std::array<double, kMentalStateCount> row_sums(const StateMatrix& m) noexcept {
    std::array<double, kMentalStateCount> sums{};
    for (std::size_t i = 0; i < kMentalStateCount; ++i) {
        for (const double v : m[i]) sums[i] += v;
    }
    return sums;
}

TransitionModel TransitionModel::from_counts(const StateMatrix& counts) {
    TransitionModel model;
    model.counts_ = counts;
    for (std::size_t i = 0; i < kMentalStateCount; ++i) {
        for (const double c : counts[i]) {
            if (!std::isfinite(c) || c < 0.0) throw RangeError("transition counts must be finite and non-negative");
        }
        model.recompute_row(i);
        if (!(model.totals_[i] > 0.0)) {
            throw RangeError("transition row '" + std::string(kStateNames[i]) + "' has no observations");
        }
    }
    return model;
}

double TransitionModel::count(MentalState from, MentalState to) const noexcept { return counts_[idx(from)][idx(to)]; }

double TransitionModel::cost(MentalState from, MentalState to) const noexcept { return costs_[idx(from)][idx(to)]; }

double TransitionModel::probability(MentalState from, MentalState to) const noexcept {
    return counts_[idx(from)][idx(to)] / totals_[idx(from)];
}

double TransitionModel::row_total(MentalState from) const noexcept { return totals_[idx(from)]; }

void TransitionModel::observe(MentalState from, MentalState to) {
    counts_[idx(from)][idx(to)] += 1.0;
    recompute_row(idx(from));
}

void TransitionModel::recompute_row(std::size_t row) {
    double total = 0.0;
    for (const double c : counts_[row]) total += c;
    totals_[row] = total;
    for (std::size_t j = 0; j < kMentalStateCount; ++j) {
        costs_[row][j] = total > 0.0 ? 1.0 - counts_[row][j] / total : 1.0;
    }
}

TransitionModel seed_from_table(const StateMatrix& probabilities, double pseudo_count) {
    const auto sums = row_sums(probabilities);
    StateMatrix counts{};
    for (std::size_t i = 0; i < kMentalStateCount; ++i) {
        for (const double p : probabilities[i]) {
            if (!(p >= 0.0 && p <= 1.0)) throw RangeError("transition probability outside [0, 1]");
        }
        if (std::abs(sums[i] - 1.0) > kRowSumTolerance) {
            std::ostringstream msg;
            msg << "row '" << kStateNames[i] << "' sums to " << sums[i] << ", expected 1.0 +/- " << kRowSumTolerance;
            throw RowSumError(msg.str(), i);
        }
        double off_diagonal = 0.0;
        for (std::size_t j = 0; j < kMentalStateCount; ++j) {
            if (j == i) continue;
            counts[i][j] = probabilities[i][j] * pseudo_count;
            off_diagonal += counts[i][j];
        }
        const double rest = pseudo_count - off_diagonal;
        counts[i][i] = rest >= 0.0 ? rest : probabilities[i][i] * pseudo_count;
    }
    return TransitionModel::from_counts(counts);
}

TransitionModel& observe_transition(TransitionModel& model, MentalState from, MentalState to) {
    model.observe(from, to);
    return model;
}

TransitionTable parse_transition_table(std::istream& in) {
    TransitionTable table;
    std::array<std::size_t, kMentalStateCount> column_state{};
    std::array<bool, kMentalStateCount> row_seen{};
    bool have_header = false;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') continue;
        if (fields.size() != kMentalStateCount + 1) {
            throw FormatError("expected a label and 7 columns, got " + std::to_string(fields.size()) + " fields",
                              line_no);
        }
        if (!have_header) {
            std::array<bool, kMentalStateCount> seen{};
            for (std::size_t c = 0; c < kMentalStateCount; ++c) {
                const auto s = mental_state_from_name(fields[c + 1]);
                if (!s || seen[idx(*s)]) throw FormatError("bad column label '" + fields[c + 1] + "'", line_no);
                seen[idx(*s)] = true;
                column_state[c] = idx(*s);
            }
            have_header = true;
            continue;
        }
        const auto row_state = mental_state_from_name(fields[0]);
        if (!row_state || row_seen[idx(*row_state)]) throw FormatError("bad row label '" + fields[0] + "'", line_no);
        row_seen[idx(*row_state)] = true;
        for (std::size_t c = 0; c < kMentalStateCount; ++c) {
            const auto& cell = fields[c + 1];
            double value = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
                throw FormatError("invalid number '" + cell + "'", line_no);
            }
            if (!(value >= 0.0 && value <= 1.0)) throw FormatError("value '" + cell + "' outside [0, 1]", line_no);
            table.values[idx(*row_state)][column_state[c]] = value;
            table.text[idx(*row_state)][column_state[c]] = cell;
        }
        ++rows;
    }
    if (!have_header) throw FormatError("missing header row", line_no);
    if (rows != kMentalStateCount) throw FormatError("expected 7 rows, got " + std::to_string(rows), line_no);
    return table;
}

TransitionTable load_transition_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string(), 0);
    return parse_transition_table(in);
}

GroupTargets default_group_targets() noexcept {
    using S = MentalState;
    return {S::kHappy, S::kHappy, S::kSad, S::kSad, S::kSad, S::kDisgust, S::kAngry, S::kFear, S::kSurprise};
}

std::string_view idle_mode_name(IdleMode m) noexcept {
    return m == IdleMode::kStochastic ? "stochastic" : "deterministic";
}

std::optional<IdleMode> idle_mode_from_name(std::string_view s) noexcept {
    if (s == "deterministic") return IdleMode::kDeterministic;
    if (s == "stochastic") return IdleMode::kStochastic;
    return std::nullopt;
}

Transition select_transition(const TransitionModel& model, const GroupTargets& targets, MentalState current,
                             const GroupVector& e) {
    std::optional<Transition> best;
    double best_ratio = 0.0;
    for (int k = 1; k <= static_cast<int>(kEmotionGroupCount); ++k) {
        const double strength = e.e(k);
        if (!(strength > 0.0)) continue;
        const MentalState target = targets[static_cast<std::size_t>(k - 1)];
        const double c = model.cost(current, target);
        const double ratio = c > 0.0 ? strength / c : std::numeric_limits<double>::infinity();
        if (!best || ratio > best_ratio) {
            best = Transition{target, k};
            best_ratio = ratio;
        }
    }
    if (!best) throw NoStimulus("group vector has no positive component");
    return *best;
}

StateMachine::StateMachine(TransitionModel model, MachineConfig config, MentalState initial)
    : model_(std::move(model)), config_(config), current_(initial), rng_(config.seed) {}

Transition StateMachine::next_state(const GroupVector& e) {
    const Transition t = select_transition(model_, config_.targets, current_, e);
    if (config_.learn_transitions) model_.observe(current_, t.next);
    current_ = t.next;
    return t;
}

MentalState StateMachine::idle_tick() {
    const auto& row = model_.counts()[idx(current_)];
    std::size_t chosen = 0;
    if (config_.idle_mode == IdleMode::kDeterministic) {
        for (std::size_t j = 1; j < kMentalStateCount; ++j) {
            if (row[j] > row[chosen]) chosen = j;
        }
    } else {
        // 53 random bits -> [0, 1), scaled by the row total.
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53 * model_.row_total(current_);
        double acc = 0.0;
        chosen = kMentalStateCount;
        for (std::size_t j = 0; j < kMentalStateCount; ++j) {
            acc += row[j];
            if (u < acc) {
                chosen = j;
                break;
            }
        }
        if (chosen == kMentalStateCount) {
            // u landed on the rounding edge; take the last reachable state.
            chosen = kMentalStateCount - 1;
            while (chosen > 0 && row[chosen] <= 0.0) --chosen;
        }
    }
    current_ = static_cast<MentalState>(chosen);
    return current_;
}

} // namespace affectnav
