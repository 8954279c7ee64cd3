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

// Engine and service configuration.
//
// A JSON file supplies any subset of these keys; AFFECTNAV_<KEY> environment
// variables (upper-cased) override the file:
//
//   host, port, data_dir, fv_file, sessions_dir, admin_token,
//   alpha, beta, idle_mode (deterministic|stochastic), seed,
//   learn_transitions, intensity (geometric_mean|euclidean),
//   subject_object (subject_object|object_only),
//   object_mutual_f3 (as_printed|predicate), metric (euclidean|cosine),
//   top_recommendations, group_targets (array of 9 state names)
//
// data_dir holds transition_table.tsv and spots.tsv, and fv.tsv unless
// fv_file says otherwise. An empty sessions_dir keeps sessions in memory.

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "affectnav/engine.hpp"

namespace affectnav {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::filesystem::path data_dir = "data";
    std::filesystem::path fv_file;
    std::filesystem::path sessions_dir;
    std::string admin_token;
    EngineConfig engine;

    [[nodiscard]] std::filesystem::path transition_table_path() const { return data_dir / "transition_table.tsv"; }
    [[nodiscard]] std::filesystem::path spots_path() const { return data_dir / "spots.tsv"; }
    [[nodiscard]] std::filesystem::path fv_path() const { return fv_file.empty() ? data_dir / "fv.tsv" : fv_file; }
};

using EnvLookup = std::function<std::optional<std::string>(std::string_view name)>;

[[nodiscard]] std::optional<std::string> process_env(std::string_view name);

// Throws ConfigError on unknown keys or bad values.
void apply_config_json(ServiceConfig& config, std::string_view json_text);
void apply_config_file(ServiceConfig& config, const std::filesystem::path& path);
void apply_env_overrides(ServiceConfig& config, const EnvLookup& env = process_env);

// Loads the data files named by config.
[[nodiscard]] Engine build_engine(const ServiceConfig& config);

} // namespace affectnav
