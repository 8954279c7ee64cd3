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

#include "affectnav/engine.hpp"

#include <chrono>

#include "affectnav/errors.hpp"

namespace affectnav {
namespace {

std::int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

} // namespace

Engine::Engine(EngineConfig config, std::shared_ptr<FvStore> fv, std::vector<SpotProfile> catalog,
               TransitionModel seed_model)
    : config_(config), fv_(std::move(fv)), catalog_(std::move(catalog)), seed_model_(std::move(seed_model)) {
    if (!fv_) fv_ = std::make_shared<FvStore>();
    if (!(config_.alpha > 0.0 && config_.alpha <= 1.0)) throw ConfigError("alpha must be in (0, 1]");
}

SessionState Engine::new_session(std::string id, std::optional<std::string> persona) const {
    UserAffectProfile affect;
    affect.alpha = config_.alpha;
    return SessionState{std::move(id), std::move(persona), StateMachine(seed_model_, config_.machine), affect, {}, {}};
}

TurnPlan Engine::plan_turn(const SessionState& session, const Utterance& utterance) const {
    const CaseFrame frame = parse_case_frame(utterance.frame);
    const auto db = fv_->snapshot();
    std::optional<std::string_view> persona;
    if (session.persona) persona = *session.persona;

    TurnPlan plan{TurnReport{}, session.machine, session.affect, session.pending_prospects, HistoryEntry{}};
    TurnReport& report = plan.report;
    report.utterance = render_case_frame(frame);
    report.egc = egc_evaluate(frame, *db, persona, config_.egc);
    report.emotions = elicit_emotions(report.egc, utterance.context, !session.pending_prospects.empty(), frame.tags);
    report.groups = group_vector(report.emotions);
    report.previous_state = plan.machine.current();

    if (report.groups.any_positive()) {
        report.chosen_group = plan.machine.next_state(report.groups).group;
        plan.affect = update_user_profile(plan.affect, feeling_vector_from_groups(report.groups));
    } else {
        // No emotion aroused: drift, and leave the affect profile alone.
        plan.machine.idle_tick();
        report.chosen_group = 0;
    }
    report.new_state = plan.machine.current();
    report.affect = plan.affect.current;

    if (!report.emotions.empty()) {
        const auto prospect = utterance.context.prospect;
        if (prospect == Prospect::kProspective) {
            plan.pending_prospects.push_back(report.egc.valence == Valence::kPleasure ? EmotionType::kHope
                                                                                      : EmotionType::kFear);
        } else if (prospect == Prospect::kConfirmed || prospect == Prospect::kDisconfirmed) {
            plan.pending_prospects.pop_back();
        }
    }

    try {
        auto ranked = recommend(plan.affect, {});
        if (ranked.size() > config_.top_recommendations) ranked.resize(config_.top_recommendations);
        report.recommendations = std::move(ranked);
    } catch (const EmptyCatalog&) {
        report.recommendations.clear();
    }

    plan.entry = HistoryEntry{utterance,           report.egc,       report.chosen_group,
                              report.previous_state, report.new_state, now_ms()};
    return plan;
}

TurnReport Engine::commit_turn(SessionState& session, TurnPlan plan) const {
    session.machine = std::move(plan.machine);
    session.affect = plan.affect;
    session.pending_prospects = std::move(plan.pending_prospects);
    session.history.push_back(std::move(plan.entry));
    return std::move(plan.report);
}

TurnReport Engine::run_turn(SessionState& session, const Utterance& utterance) const {
    return commit_turn(session, plan_turn(session, utterance));
}

Transition Engine::apply_stimulus(SessionState& session, const GroupVector& e) const {
    const Transition t = session.machine.next_state(e);
    session.affect = update_user_profile(session.affect, feeling_vector_from_groups(e));
    return t;
}

std::vector<RankedSpot> Engine::recommend(const UserAffectProfile& affect, RankQuery query) const {
    query.metric = config_.metric;
    return rank_spots(affect, catalog_, query);
}

SessionState replay_session(const Engine& engine, std::string id, std::optional<std::string> persona,
                            std::span<const Utterance> utterances) {
    SessionState state = engine.new_session(std::move(id), std::move(persona));
    for (const auto& u : utterances) engine.run_turn(state, u);
    return state;
}

} // namespace affectnav
