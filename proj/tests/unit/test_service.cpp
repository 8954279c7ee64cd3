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

#include <gtest/gtest.h>

#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "affectnav/errors.hpp"
#include "affectnav/service.hpp"
#include "affectnav/trace.hpp"
#include "test_support.hpp"

using namespace affectnav;

namespace {

const std::vector<std::string> kScript{
    "V(S:I, O:okonomiyaki, P:eat)",
    "V(S:I, O:wallet, P:lose)",
    "A(S:scenery, C:beautiful) +love",
    "V(S:guide, O:camera, P:break) | agent=other approval=disapprove",
    "V(S:nobody, P:go)",
    "V(S:I, O:shrine, P:visit) | prospect=prospective",
    "V(S:I, O:shrine, P:visit) | prospect=disconfirmed",
    "A(S:restaurant, C:closed)!",
};

std::vector<MentalState> trajectory(const SessionState& s) {
    std::vector<MentalState> out;
    for (const auto& h : s.history) out.push_back(h.state_after);
    return out;
}

} // namespace

TEST(Service, FreshSessionIsQuiet) {
    testsupport::TempDir dir;
    ConciergeService service(testsupport::engine_in(dir.path()));
    const auto id = service.create_session();
    EXPECT_EQ(id.size(), 16u);
    const auto s = service.session(id);
    EXPECT_EQ(s.machine.current(), MentalState::kQuiet);
    EXPECT_FALSE(s.persona.has_value());
    EXPECT_EQ(service.session_ids(), std::vector<std::string>{id});
}

TEST(Service, JoyTurnGoesHappy) {
    testsupport::TempDir dir;
    ConciergeService service(testsupport::engine_in(dir.path()));
    const auto id = service.create_session();
    const auto r = service.post_utterance(id, {"V(S:I, O:okonomiyaki, P:eat)", {}});
    EXPECT_EQ(r.previous_state, MentalState::kQuiet);
    EXPECT_EQ(r.new_state, MentalState::kHappy);
    EXPECT_EQ(service.session(id).machine.current(), MentalState::kHappy);
}

TEST(Service, RecommendationsBeforeAnyTurn) {
    testsupport::TempDir dir;
    const auto engine = testsupport::engine_in(dir.path());
    ConciergeService service(engine);
    const auto id = service.create_session();
    const auto ranked = service.recommendations(id, {});
    const auto expected = rank_spots(UserAffectProfile{}, engine->catalog());
    ASSERT_EQ(ranked.size(), expected.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) EXPECT_EQ(ranked[i].spot.name, expected[i].spot.name);
}

TEST(Service, UnknownSession) {
    testsupport::TempDir dir;
    ConciergeService service(testsupport::engine_in(dir.path()));
    EXPECT_THROW((void)service.session("0123456789abcdef"), UnknownSession);
    EXPECT_THROW((void)service.post_utterance("nope", {"V(S:I, P:go)", {}}), UnknownSession);
    EXPECT_THROW((void)service.recommendations("nope", {}), UnknownSession);
}

TEST(Service, FailedTurnIsNotLogged) {
    testsupport::TempDir dir;
    const auto sessions = dir.path() / "sessions";
    ConciergeService service(testsupport::engine_in(dir.path()), sessions);
    const auto id = service.create_session();
    (void)service.post_utterance(id, {"V(S:I, O:okonomiyaki, P:eat)", {}});
    EXPECT_THROW((void)service.post_utterance(id, {"V(S:I, Q:x, P:go)", {}}), UnknownSignature);
    std::ifstream log(sessions / (id + ".jsonl"));
    int lines = 0;
    for (std::string line; std::getline(log, line);) ++lines;
    EXPECT_EQ(lines, 2);
    EXPECT_EQ(service.session(id).history.size(), 1u);
}

// Interleaving two sessions gives each the same trajectory it gets alone.
TEST(Service, SessionsAreIsolated) {
    testsupport::TempDir dir;
    const auto engine = testsupport::engine_in(dir.path());
    ConciergeService alone(engine);
    const auto solo = alone.create_session();
    for (const auto& line : kScript) (void)alone.post_utterance(solo, parse_utterance_line(line));

    ConciergeService shared(engine);
    const auto a = shared.create_session();
    const auto b = shared.create_session();
    for (std::size_t i = 0; i < kScript.size(); ++i) {
        (void)shared.post_utterance(a, parse_utterance_line(kScript[i]));
        (void)shared.post_utterance(b, {i % 2 ? "V(S:I, O:wallet, P:lose)" : "A(S:view, C:fun)", {}});
    }
    EXPECT_EQ(trajectory(shared.session(a)), trajectory(alone.session(solo)));
    EXPECT_TRUE(shared.session(a).machine == alone.session(solo).machine);
}

TEST(Service, ConcurrentSessions) {
    testsupport::TempDir dir;
    const auto engine = testsupport::engine_in(dir.path());
    ConciergeService service(engine, dir.path() / "sessions");
    std::vector<std::string> ids;
    for (int i = 0; i < 8; ++i) ids.push_back(service.create_session());
    std::vector<std::thread> workers;
    for (const auto& id : ids) {
        workers.emplace_back([&service, id] {
            for (int round = 0; round < 5; ++round)
                for (const auto& line : kScript) (void)service.post_utterance(id, parse_utterance_line(line));
        });
    }
    // Several writers on one session too.
    const auto hot = service.create_session();
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&service, hot] {
            for (int n = 0; n < 10; ++n) (void)service.post_utterance(hot, {"V(S:I, O:okonomiyaki, P:eat)", {}});
        });
    }
    for (auto& w : workers) w.join();

    ConciergeService reference(engine);
    const auto ref = reference.create_session();
    for (int round = 0; round < 5; ++round)
        for (const auto& line : kScript) (void)reference.post_utterance(ref, parse_utterance_line(line));
    for (const auto& id : ids) EXPECT_EQ(trajectory(service.session(id)), trajectory(reference.session(ref)));
    const auto h = service.session(hot);
    EXPECT_EQ(h.history.size(), 40u);
    for (std::size_t i = 1; i < h.history.size(); ++i) {
        EXPECT_EQ(h.history[i].state_before, h.history[i - 1].state_after);
    }
}

TEST(Service, RestoreReplaysLogs) {
    testsupport::TempDir dir;
    const auto sessions = dir.path() / "sessions";
    EngineConfig ecfg;
    ecfg.machine.idle_mode = IdleMode::kStochastic;
    ecfg.machine.seed = 2024;
    const auto engine = testsupport::engine_in(dir.path(), ecfg);
    std::string a;
    std::string b;
    SessionState before_a = engine->new_session("x");
    SessionState before_b = engine->new_session("y");
    {
        ConciergeService service(engine, sessions);
        a = service.create_session();
        b = service.create_session("alice");
        for (int round = 0; round < 3; ++round) {
            for (const auto& line : kScript) (void)service.post_utterance(a, parse_utterance_line(line));
        }
        (void)service.post_utterance(b, {"V(S:I, O:okonomiyaki, P:eat)", {}});
        before_a = service.session(a);
        before_b = service.session(b);
    }
    ConciergeService restarted(engine, sessions);
    EXPECT_EQ(restarted.restore(), 2u);
    const auto after_a = restarted.session(a);
    EXPECT_EQ(trajectory(after_a), trajectory(before_a));
    EXPECT_TRUE(after_a.machine == before_a.machine);
    EXPECT_EQ(after_a.affect.current, before_a.affect.current);
    EXPECT_EQ(after_a.pending_prospects, before_a.pending_prospects);
    EXPECT_EQ(restarted.session(b).persona, std::optional<std::string>("alice"));
    EXPECT_EQ(trajectory(restarted.session(b)), trajectory(before_b));
    // The restored session keeps going from where it was.
    const auto r = restarted.post_utterance(a, {"V(S:I, O:okonomiyaki, P:eat)", {}});
    EXPECT_EQ(r.previous_state, before_a.machine.current());
}
