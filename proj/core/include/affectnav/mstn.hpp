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

#pragma once

// Mental state transition network: seven mental states, transition costs
// learned from observed transition counts, stimulus-driven transitions
// that trade emotion-group strength against cost, and idle drift.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "affectnav/elicitation.hpp"

namespace affectnav {

// Declaration order is the row/column order of transition tables.
enum class MentalState { kHappy, kQuiet, kSad, kSurprise, kAngry, kFear, kDisgust };

inline constexpr std::size_t kMentalStateCount = 7;

[[nodiscard]] const std::array<MentalState, kMentalStateCount>& all_mental_states() noexcept;
[[nodiscard]] std::string_view mental_state_name(MentalState s) noexcept;
[[nodiscard]] std::optional<MentalState> mental_state_from_name(std::string_view name) noexcept;

using StateMatrix = std::array<std::array<double, kMentalStateCount>, kMentalStateCount>;

[[nodiscard]] std::array<double, kMentalStateCount> row_sums(const StateMatrix& m) noexcept;

// Transition counts #(i -> j) and the costs derived from them:
//     cost(i, j) = 1 - #(i -> j) / sum_k #(i -> k)
class TransitionModel {
public:
    // Every row must be non-negative with a positive sum (RangeError).
    [[nodiscard]] static TransitionModel from_counts(const StateMatrix& counts);

    [[nodiscard]] double count(MentalState from, MentalState to) const noexcept;
    [[nodiscard]] double cost(MentalState from, MentalState to) const noexcept;
    [[nodiscard]] double probability(MentalState from, MentalState to) const noexcept;
    [[nodiscard]] double row_total(MentalState from) const noexcept;

    [[nodiscard]] const StateMatrix& counts() const noexcept { return counts_; }
    [[nodiscard]] const StateMatrix& costs() const noexcept { return costs_; }

    // #(from -> to) += 1; only row `from` changes.
    void observe(MentalState from, MentalState to);

    friend bool operator==(const TransitionModel&, const TransitionModel&) = default;

private:
    void recompute_row(std::size_t row);

    StateMatrix counts_{};
    StateMatrix costs_{};
    std::array<double, kMentalStateCount> totals_{};
};

inline constexpr double kSeedPseudoCount = 1000.0;
inline constexpr double kRowSumTolerance = 0.01;

// Turns a table of relative transition frequencies into pseudo-counts.
// Off-diagonal counts are p * pseudo_count; the diagonal takes the rest of
// the row so every row totals exactly pseudo_count, which absorbs the
// rounding of printed tables. Throws RangeError for entries outside [0, 1]
// and RowSumError for rows that depart from 1 by more than kRowSumTolerance.
[[nodiscard]] TransitionModel seed_from_table(const StateMatrix& probabilities,
                                              double pseudo_count = kSeedPseudoCount);

TransitionModel& observe_transition(TransitionModel& model, MentalState from, MentalState to);

// Labeled 7x7 decimal table, see data/transition_table.tsv.
struct TransitionTable {
    StateMatrix values{};
    std::array<std::array<std::string, kMentalStateCount>, kMentalStateCount> text{}; // cells as written
};

[[nodiscard]] TransitionTable parse_transition_table(std::istream& in);
[[nodiscard]] TransitionTable load_transition_table(const std::filesystem::path& path);

// Target mental state of each emotion group, index 0 = group 1.
using GroupTargets = std::array<MentalState, kEmotionGroupCount>;

[[nodiscard]] GroupTargets default_group_targets() noexcept;

enum class IdleMode { kDeterministic, kStochastic };

[[nodiscard]] std::string_view idle_mode_name(IdleMode m) noexcept;
[[nodiscard]] std::optional<IdleMode> idle_mode_from_name(std::string_view s) noexcept;

struct MachineConfig {
    GroupTargets targets = default_group_targets();
    IdleMode idle_mode = IdleMode::kDeterministic;
    bool learn_transitions = true; // next_state feeds observe_transition
    std::uint64_t seed = 0;
};

struct Transition {
    MentalState next = MentalState::kQuiet;
    int group = 0; // 1..9

    friend bool operator==(const Transition&, const Transition&) = default;
};

// argmax_k e_k / cost(current, target(k)) over groups with e_k > 0.
// A zero cost makes the ratio +infinity. Ties go to the lowest group.
// Throws NoStimulus when no e_k is positive.
[[nodiscard]] Transition select_transition(const TransitionModel& model, const GroupTargets& targets,
                                           MentalState current, const GroupVector& e);

class StateMachine {
public:
    explicit StateMachine(TransitionModel model, MachineConfig config = {},
                          MentalState initial = MentalState::kQuiet);

    [[nodiscard]] MentalState current() const noexcept { return current_; }
    [[nodiscard]] const TransitionModel& model() const noexcept { return model_; }
    [[nodiscard]] const MachineConfig& config() const noexcept { return config_; }

    void set_current(MentalState s) noexcept { current_ = s; }

    // Moves to the selected state and, when learning is on, records the
    // transition.
    Transition next_state(const GroupVector& e);

    // Drift without a stimulus. Deterministic mode takes the most probable
    // successor (lowest index on ties); stochastic mode samples the row.
    // Counts are not updated.
    MentalState idle_tick();

    friend bool operator==(const StateMachine& a, const StateMachine& b) {
        return a.current_ == b.current_ && a.model_ == b.model_ && a.rng_ == b.rng_;
    }

private:
    TransitionModel model_;
    MachineConfig config_;
    MentalState current_;
    std::mt19937_64 rng_;
};

} // namespace affectnav
