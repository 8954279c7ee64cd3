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

#include <json.hpp>

#include "affectnav/engine.hpp"

namespace affectnav::detail {

using json = nlohmann::json;

json to_json(const FeelingVector6& v);
json to_json(const EgcResult& r);
json to_json(const EmotionInstance& e);
json to_json(const RankedSpot& r);
json to_json(const SpotProfile& s);
json to_json(const TurnReport& r);
json to_json(const ElicitationContext& c);
json session_state(const SessionState& s);

// Missing keys keep their defaults. Throws std::invalid_argument on unknown
// keys or values.
ElicitationContext context_from_json(const json& j);

std::string dump(const json& j, int indent);

} // namespace affectnav::detail
