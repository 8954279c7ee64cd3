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

#include "affectnav/service.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

#include "affectnav/errors.hpp"
#include "json_codec.hpp"

namespace affectnav {
namespace {

using detail::json;

std::string random_id() {
    static std::mutex mutex;
    static std::mt19937_64 rng{std::random_device{}()};
    std::lock_guard lock(mutex);
    constexpr char kHex[] = "0123456789abcdef";
    std::string id(16, '0');
    auto bits = rng();
    for (auto& ch : id) {
        ch = kHex[bits & 0xf];
        bits >>= 4;
    }
    return id;
}

bool valid_id(std::string_view id) {
    if (id.empty() || id.size() > 64) return false;
    for (const char c : id) {
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    }
    return true;
}

} // namespace

ConciergeService::ConciergeService(std::shared_ptr<const Engine> engine, std::filesystem::path sessions_dir)
    : engine_(std::move(engine)), sessions_dir_(std::move(sessions_dir)) {
    if (!engine_) throw std::invalid_argument("ConciergeService needs an engine");
    if (!sessions_dir_.empty()) std::filesystem::create_directories(sessions_dir_);
}

std::string ConciergeService::create_session(std::optional<std::string> persona) {
    if (persona && (persona->empty() || *persona == kDefaultLayer)) persona.reset();
    std::unique_lock lock(sessions_mutex_);
    std::string id;
    do {
        id = random_id();
    } while (sessions_.contains(id));
    auto slot = std::make_shared<Slot>(engine_->new_session(id, persona));
    append_log(id, json{{"event", "create"}, {"id", id}, {"persona", persona ? json(*persona) : json(nullptr)}}.dump());
    sessions_.emplace(id, std::move(slot));
    return id;
}

std::shared_ptr<ConciergeService::Slot> ConciergeService::find(const std::string& id) const {
    std::shared_lock lock(sessions_mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw UnknownSession(id);
    return it->second;
}

TurnReport ConciergeService::post_utterance(const std::string& id, const Utterance& utterance) {
    const auto slot = find(id);
    std::lock_guard lock(slot->mutex);
    TurnPlan plan = engine_->plan_turn(slot->state, utterance);
    append_log(id, json{{"event", "utterance"},
                        {"frame", utterance.frame},
                        {"context", detail::to_json(utterance.context)},
                        {"ts", plan.entry.timestamp_ms}}
                       .dump());
    return engine_->commit_turn(slot->state, std::move(plan));
}

SessionState ConciergeService::session(const std::string& id) const {
    const auto slot = find(id);
    std::lock_guard lock(slot->mutex);
    return slot->state;
}

std::vector<RankedSpot> ConciergeService::recommendations(const std::string& id, const RankQuery& query) const {
    const auto slot = find(id);
    UserAffectProfile affect;
    {
        std::lock_guard lock(slot->mutex);
        affect = slot->state.affect;
    }
    return engine_->recommend(affect, query);
}

std::vector<std::string> ConciergeService::session_ids() const {
    std::shared_lock lock(sessions_mutex_);
    std::vector<std::string> ids;
    ids.reserve(sessions_.size());
    for (const auto& [id, _] : sessions_) ids.push_back(id);
    return ids;
}

void ConciergeService::append_log(const std::string& id, const std::string& line) const {
    if (sessions_dir_.empty()) return;
    const auto path = sessions_dir_ / (id + ".jsonl");
    std::ofstream out(path, std::ios::app);
    out << line << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot append to session log " + path.string());
}

std::size_t ConciergeService::restore() {
    if (sessions_dir_.empty() || !std::filesystem::exists(sessions_dir_)) return 0;
    std::size_t restored = 0;
    for (const auto& entry : std::filesystem::directory_iterator(sessions_dir_)) {
        if (entry.path().extension() != ".jsonl") continue;
        const std::string id = entry.path().stem().string();
        if (!valid_id(id)) continue;

        std::ifstream in(entry.path());
        std::string line;
        std::size_t line_no = 0;
        std::optional<SessionState> state;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            json j;
            try {
                j = json::parse(line);
            } catch (const json::parse_error&) {
                throw FormatError("corrupt session log " + entry.path().string(), line_no);
            }
            const auto event = j.value("event", std::string{});
            if (event == "create") {
                std::optional<std::string> persona;
                if (j.contains("persona") && j["persona"].is_string()) persona = j["persona"].get<std::string>();
                state = engine_->new_session(id, persona);
            } else if (event == "utterance" && state) {
                Utterance u{j.at("frame").get<std::string>(), detail::context_from_json(j.value("context", json()))};
                auto plan = engine_->plan_turn(*state, u);
                plan.entry.timestamp_ms = j.value("ts", std::int64_t{0});
                engine_->commit_turn(*state, std::move(plan));
            } else {
                throw FormatError("unexpected record in " + entry.path().string(), line_no);
            }
        }
        if (!state) continue;
        auto slot = std::make_shared<Slot>(std::move(*state));
        std::unique_lock lock(sessions_mutex_);
        sessions_.insert_or_assign(id, std::move(slot));
        ++restored;
    }
    return restored;
}

} // namespace affectnav
