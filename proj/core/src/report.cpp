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

#include "affectnav/report.hpp"

#include <stdexcept>

#include "json_codec.hpp"

namespace affectnav {
namespace detail {

json to_json(const FeelingVector6& v) {
    json j = json::object();
    for (std::size_t i = 0; i < kFeelingCount; ++i) j[std::string(feeling_name(static_cast<Feeling>(i)))] = v.values[i];
    return j;
}

json to_json(const EgcResult& r) {
    return json{{"f1", r.vector.f1},
                {"f2", r.vector.f2},
                {"f3", r.vector.f3},
                {"used_beta", r.vector.used_beta},
                {"area", area_name(r.area)},
                {"valence", valence_name(r.valence)},
                {"intensity", r.intensity}};
}

json to_json(const EmotionInstance& e) {
    return json{{"type", emotion_name(e.type)}, {"group", emotion_group(e.type)}, {"strength", e.strength}};
}

json to_json(const SpotProfile& s) {
    return json{{"name", s.name},
                {"lat", s.location.lat},
                {"lon", s.location.lon},
                {"profile", to_json(s.profile)},
                {"description", s.description}};
}

json to_json(const RankedSpot& r) {
    json j = to_json(r.spot);
    j["distance"] = r.profile_distance;
    j["km"] = r.km ? json(*r.km) : json(nullptr);
    return j;
}

json to_json(const TurnReport& r) {
    json emotions = json::array();
    for (const auto& e : r.emotions) emotions.push_back(to_json(e));
    json recs = json::array();
    for (const auto& s : r.recommendations) recs.push_back(to_json(s));
    return json{{"utterance", r.utterance},
                {"egc", to_json(r.egc)},
                {"emotions", std::move(emotions)},
                {"groups", r.groups.values()},
                {"previous_state", mental_state_name(r.previous_state)},
                {"new_state", mental_state_name(r.new_state)},
                {"chosen_group", r.chosen_group},
                {"affect", to_json(r.affect)},
                {"recommendations", std::move(recs)}};
}

json to_json(const ElicitationContext& c) {
    return json{{"agent", party_name(c.agent)},
                {"affected", party_name(c.affected)},
                {"desirability", desirability_name(c.desirability_for_other)},
                {"prospect", prospect_name(c.prospect)},
                {"approval", approval_name(c.approval)}};
}

json session_state(const SessionState& s) {
    return json{{"id", s.id},
                {"persona", s.persona ? json(*s.persona) : json(nullptr)},
                {"state", mental_state_name(s.machine.current())},
                {"affect", to_json(s.affect.current)},
                {"alpha", s.affect.alpha},
                {"turns", s.history.size()},
                {"pending_prospects", s.pending_prospects.size()}};
}

namespace {

template <typename T, typename Parse>
void read_enum(const json& j, const char* key, T& out, Parse parse) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (!v.is_string()) throw std::invalid_argument(std::string("context.") + key + " must be a string");
    const auto parsed = parse(v.template get<std::string>());
    if (!parsed) throw std::invalid_argument("invalid context." + std::string(key) + " '" + v.template get<std::string>() + "'");
    out = *parsed;
}

} // namespace

ElicitationContext context_from_json(const json& j) {
    ElicitationContext c;
    if (j.is_null()) return c;
    if (!j.is_object()) throw std::invalid_argument("context must be an object");
    for (const auto& [key, _] : j.items()) {
        if (key != "agent" && key != "affected" && key != "desirability" && key != "prospect" && key != "approval") {
            throw std::invalid_argument("unknown context key '" + key + "'");
        }
    }
    read_enum(j, "agent", c.agent, party_from_name);
    read_enum(j, "affected", c.affected, party_from_name);
    read_enum(j, "desirability", c.desirability_for_other, desirability_from_name);
    read_enum(j, "prospect", c.prospect, prospect_from_name);
    read_enum(j, "approval", c.approval, approval_from_name);
    return c;
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

} // namespace detail

std::string turn_report_json(const TurnReport& report, int indent) {
    return detail::dump(detail::to_json(report), indent);
}

std::string ranked_spots_json(std::span<const RankedSpot> spots, int indent) {
    detail::json arr = detail::json::array();
    for (const auto& s : spots) arr.push_back(detail::to_json(s));
    return detail::dump(detail::json{{"spots", std::move(arr)}}, indent);
}

std::string session_state_json(const SessionState& session, int indent) {
    return detail::dump(detail::session_state(session), indent);
}

std::string catalog_json(std::span<const SpotProfile> catalog, int indent) {
    detail::json arr = detail::json::array();
    for (const auto& s : catalog) arr.push_back(detail::to_json(s));
    return detail::dump(detail::json{{"spots", std::move(arr)}}, indent);
}

} // namespace affectnav
