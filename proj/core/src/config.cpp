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

#include "affectnav/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "affectnav/errors.hpp"

namespace affectnav {
namespace {

using json = nlohmann::json;

constexpr std::string_view kKeys[] = {"host",
                                      "port",
                                      "data_dir",
                                      "fv_file",
                                      "sessions_dir",
                                      "admin_token",
                                      "alpha",
                                      "beta",
                                      "idle_mode",
                                      "seed",
                                      "learn_transitions",
                                      "intensity",
                                      "subject_object",
                                      "object_mutual_f3",
                                      "metric",
                                      "top_recommendations",
                                      "group_targets"};

bool is_string_key(std::string_view key) {
    return key != "port" && key != "alpha" && key != "beta" && key != "seed" && key != "learn_transitions" &&
           key != "top_recommendations" && key != "group_targets";
}

std::optional<IntensityFormula> intensity_from_name(std::string_view s) {
    if (s == "geometric_mean") return IntensityFormula::kGeometricMean;
    if (s == "euclidean") return IntensityFormula::kEuclidean;
    return std::nullopt;
}

std::optional<SubjectObjectReading> reading_from_name(std::string_view s) {
    if (s == "subject_object") return SubjectObjectReading::kSubjectObject;
    if (s == "object_only") return SubjectObjectReading::kObjectOnly;
    return std::nullopt;
}

std::optional<ObjectMutualThirdAxis> om_from_name(std::string_view s) {
    if (s == "as_printed") return ObjectMutualThirdAxis::kAsPrinted;
    if (s == "predicate") return ObjectMutualThirdAxis::kPredicate;
    return std::nullopt;
}

template <typename T, typename Parse>
T named(const std::string& key, const std::string& value, Parse parse) {
    const auto v = parse(value);
    if (!v) throw ConfigError("invalid value '" + value + "' for " + key);
    return *v;
}

// Applies one key whose value is given as JSON.
void apply_key(ServiceConfig& c, const std::string& key, const json& v) {
    try {
        if (key == "host") {
            c.host = v.get<std::string>();
        } else if (key == "port") {
            c.port = v.get<int>();
            if (c.port < 0 || c.port > 65535) throw ConfigError("port out of range");
        } else if (key == "data_dir") {
            c.data_dir = v.get<std::string>();
        } else if (key == "fv_file") {
            c.fv_file = v.get<std::string>();
        } else if (key == "sessions_dir") {
            c.sessions_dir = v.get<std::string>();
        } else if (key == "admin_token") {
            c.admin_token = v.get<std::string>();
        } else if (key == "alpha") {
            c.engine.alpha = v.get<double>();
            if (!(c.engine.alpha > 0.0 && c.engine.alpha <= 1.0)) throw ConfigError("alpha must be in (0, 1]");
        } else if (key == "beta") {
            c.engine.egc.beta = v.get<double>();
        } else if (key == "idle_mode") {
            c.engine.machine.idle_mode = named<IdleMode>(key, v.get<std::string>(), idle_mode_from_name);
        } else if (key == "seed") {
            c.engine.machine.seed = v.get<std::uint64_t>();
        } else if (key == "learn_transitions") {
            c.engine.machine.learn_transitions = v.get<bool>();
        } else if (key == "intensity") {
            c.engine.egc.intensity = named<IntensityFormula>(key, v.get<std::string>(), intensity_from_name);
        } else if (key == "subject_object") {
            c.engine.egc.subject_object = named<SubjectObjectReading>(key, v.get<std::string>(), reading_from_name);
        } else if (key == "object_mutual_f3") {
            c.engine.egc.object_mutual_f3 = named<ObjectMutualThirdAxis>(key, v.get<std::string>(), om_from_name);
        } else if (key == "metric") {
            c.engine.metric = named<ProfileMetric>(key, v.get<std::string>(), profile_metric_from_name);
        } else if (key == "top_recommendations") {
            c.engine.top_recommendations = v.get<std::size_t>();
        } else if (key == "group_targets") {
            if (!v.is_array() || v.size() != kEmotionGroupCount) {
                throw ConfigError("group_targets must list 9 mental states");
            }
            for (std::size_t k = 0; k < kEmotionGroupCount; ++k) {
                c.engine.machine.targets[k] = named<MentalState>(key, v[k].get<std::string>(), mental_state_from_name);
            }
        } else {
            throw ConfigError("unknown configuration key '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw ConfigError("bad value for " + key + ": " + e.what());
    }
}

} // namespace

std::optional<std::string> process_env(std::string_view name) {
    const char* v = std::getenv(std::string(name).c_str());
    if (!v) return std::nullopt;
    return std::string(v);
}

void apply_config_json(ServiceConfig& config, std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    for (const auto& [key, value] : j.items()) apply_key(config, key, value);
}

void apply_config_file(ServiceConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    apply_config_json(config, text.str());
}

void apply_env_overrides(ServiceConfig& config, const EnvLookup& env) {
    for (const auto key : kKeys) {
        std::string var = "AFFECTNAV_";
        for (const char ch : key) var += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        const auto raw = env(var);
        if (!raw) continue;
        json value = *raw;
        if (!is_string_key(key)) {
            try {
                value = json::parse(*raw);
            } catch (const json::parse_error&) {
                throw ConfigError("invalid value '" + *raw + "' in " + var);
            }
        }
        apply_key(config, std::string(key), value);
    }
}

Engine build_engine(const ServiceConfig& config) {
    const auto table = load_transition_table(config.transition_table_path());
    auto catalog = load_spot_catalog(config.spots_path());
    auto fv = FvStore::open(config.fv_path());
    return Engine(config.engine, std::move(fv), std::move(catalog), seed_from_table(table.values));
}

} // namespace affectnav
