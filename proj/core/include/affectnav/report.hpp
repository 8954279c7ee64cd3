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

// JSON renderings shared by the CLI and the HTTP service, so both emit
// byte-identical turn reports for identical inputs.

#include <span>
#include <string>

#include "affectnav/engine.hpp"
#include "affectnav/fv_store.hpp"
#include "affectnav/recommend.hpp"

namespace affectnav {

// indent < 0 gives compact single-line output.
[[nodiscard]] std::string turn_report_json(const TurnReport& report, int indent = -1);
[[nodiscard]] std::string ranked_spots_json(std::span<const RankedSpot> spots, int indent = -1);
[[nodiscard]] std::string session_state_json(const SessionState& session, int indent = -1);
[[nodiscard]] std::string catalog_json(std::span<const SpotProfile> catalog, int indent = -1);

} // namespace affectnav
