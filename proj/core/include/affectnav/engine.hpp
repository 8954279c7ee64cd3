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

// The per-utterance pipeline shared by the CLI and the HTTP service:
// case frame -> EGC -> elicitation -> group vector -> MSTN -> affect
// profile -> recommendations.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affectnav/case_frame.hpp"
#include "affectnav/egc.hpp"
#include "affectnav/elicitation.hpp"
#include "affectnav/fv_store.hpp"
#include "affectnav/mstn.hpp"
#include "affectnav/recommend.hpp"

namespace affectnav {

struct EngineConfig {
    EgcConfig egc;
    MachineConfig machine;
    double alpha = 0.5;
    ProfileMetric metric = ProfileMetric::kEuclidean;
    std::size_t top_recommendations = 3;
};

struct Utterance {
    std::string frame; // case-frame notation
    ElicitationContext context;

    friend bool operator==(const Utterance&, const Utterance&) = default;
};

struct HistoryEntry {
    Utterance utterance;
    EgcResult egc;
    int chosen_group = 0; // 0 when the turn drifted without a stimulus
    MentalState state_before = MentalState::kQuiet;
    MentalState state_after = MentalState::kQuiet;
    std::int64_t timestamp_ms = 0;
};

struct SessionState {
    std::string id;
    std::optional<std::string> persona; // nullopt: default FV layer only
    StateMachine machine;
    UserAffectProfile affect;
    std::vector<HistoryEntry> history;
    std::vector<EmotionType> pending_prospects; // hope/fear awaiting an outcome
};

struct TurnReport {
    std::string utterance; // canonical rendering of the parsed frame
    EgcResult egc;
    std::vector<EmotionInstance> emotions;
    GroupVector groups;
    MentalState previous_state = MentalState::kQuiet;
    MentalState new_state = MentalState::kQuiet;
    int chosen_group = 0;
    FeelingVector6 affect;
    std::vector<RankedSpot> recommendations;
};

// Everything a turn will change, computed without touching the session.
struct TurnPlan {
    TurnReport report;
    StateMachine machine;
    UserAffectProfile affect;
    std::vector<EmotionType> pending_prospects;
    HistoryEntry entry;
};

class Engine {
public:
    Engine(EngineConfig config, std::shared_ptr<FvStore> fv, std::vector<SpotProfile> catalog,
           TransitionModel seed_model);

    [[nodiscard]] const EngineConfig& config() const noexcept { return config_; }
    [[nodiscard]] FvStore& fv_store() const noexcept { return *fv_; }
    [[nodiscard]] std::span<const SpotProfile> catalog() const noexcept { return catalog_; }
    [[nodiscard]] const TransitionModel& seed_model() const noexcept { return seed_model_; }

    // Starts in quiet.
    [[nodiscard]] SessionState new_session(std::string id, std::optional<std::string> persona = std::nullopt) const;

    // Throws the pipeline errors (SyntaxError, UnknownSignature,
    // DuplicateSlot, ContextError); the session is untouched on failure.
    [[nodiscard]] TurnPlan plan_turn(const SessionState& session, const Utterance& utterance) const;
    TurnReport commit_turn(SessionState& session, TurnPlan plan) const;
    TurnReport run_turn(SessionState& session, const Utterance& utterance) const;

    // Applies a group vector directly, bypassing the appraisal stages.
    Transition apply_stimulus(SessionState& session, const GroupVector& e) const;

    // Uses the engine's metric; query.metric is ignored.
    [[nodiscard]] std::vector<RankedSpot> recommend(const UserAffectProfile& affect, RankQuery query) const;

private:
    EngineConfig config_;
    std::shared_ptr<FvStore> fv_;
    std::vector<SpotProfile> catalog_;
    TransitionModel seed_model_;
};

// Rebuilds a session by running its utterances through a fresh state.
[[nodiscard]] SessionState replay_session(const Engine& engine, std::string id, std::optional<std::string> persona,
                                          std::span<const Utterance> utterances);

} // namespace affectnav
