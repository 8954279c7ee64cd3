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

// Session-scoped concierge service. Each session owns its state machine and
// affect profile; turns on one session are serialized, distinct sessions run
// concurrently.
//
// With a sessions directory, every session is an append-only JSON-lines log
// (<id>.jsonl): a "create" record followed by one "utterance" record per
// successful turn. restore() rebuilds sessions by replaying the logs.

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "affectnav/engine.hpp"

namespace affectnav {

class ConciergeService {
public:
    explicit ConciergeService(std::shared_ptr<const Engine> engine, std::filesystem::path sessions_dir = {});

    [[nodiscard]] const Engine& engine() const noexcept { return *engine_; }

    std::string create_session(std::optional<std::string> persona = std::nullopt);

    // Runs the full pipeline atomically for the session.
    TurnReport post_utterance(const std::string& id, const Utterance& utterance);

    // Copy of the session's current state. Throws UnknownSession.
    [[nodiscard]] SessionState session(const std::string& id) const;

    [[nodiscard]] std::vector<RankedSpot> recommendations(const std::string& id, const RankQuery& query) const;

    [[nodiscard]] std::vector<std::string> session_ids() const;

    // Replays every log in the sessions directory; returns how many sessions
    // were restored.
    std::size_t restore();

private:
    struct Slot {
        explicit Slot(SessionState s) : state(std::move(s)) {}
        mutable std::mutex mutex;
        SessionState state;
    };

    [[nodiscard]] std::shared_ptr<Slot> find(const std::string& id) const;
    void append_log(const std::string& id, const std::string& line) const;

    std::shared_ptr<const Engine> engine_;
    std::filesystem::path sessions_dir_;
    mutable std::shared_mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Slot>> sessions_;
};

} // namespace affectnav
