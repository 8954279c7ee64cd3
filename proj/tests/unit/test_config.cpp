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

#include <map>
#include <optional>
#include <string>

#include "affectnav/config.hpp"
#include "affectnav/errors.hpp"
#include "test_support.hpp"

using namespace affectnav;

TEST(Config, JsonKeys) {
    ServiceConfig cfg;
    apply_config_json(cfg, R"({"port": 9000, "alpha": 0.25, "beta": 0.4, "idle_mode": "stochastic",
                               "seed": 77, "metric": "cosine", "learn_transitions": false,
                               "subject_object": "object_only", "intensity": "euclidean",
                               "top_recommendations": 5, "admin_token": "s3cret",
                               "group_targets": ["happy","happy","sad","sad","sad","disgust","angry","fear","quiet"]})");
    EXPECT_EQ(cfg.port, 9000);
    EXPECT_EQ(cfg.engine.alpha, 0.25);
    EXPECT_EQ(cfg.engine.egc.beta, 0.4);
    EXPECT_EQ(cfg.engine.machine.idle_mode, IdleMode::kStochastic);
    EXPECT_EQ(cfg.engine.machine.seed, 77u);
    EXPECT_EQ(cfg.engine.metric, ProfileMetric::kCosine);
    EXPECT_FALSE(cfg.engine.machine.learn_transitions);
    EXPECT_EQ(cfg.engine.egc.subject_object, SubjectObjectReading::kObjectOnly);
    EXPECT_EQ(cfg.engine.egc.intensity, IntensityFormula::kEuclidean);
    EXPECT_EQ(cfg.engine.top_recommendations, 5u);
    EXPECT_EQ(cfg.admin_token, "s3cret");
    EXPECT_EQ(cfg.engine.machine.targets[8], MentalState::kQuiet);
}

TEST(Config, Rejections) {
    ServiceConfig cfg;
    EXPECT_THROW(apply_config_json(cfg, R"({"colour": 1})"), ConfigError);
    EXPECT_THROW(apply_config_json(cfg, R"({"idle_mode": "sometimes"})"), ConfigError);
    EXPECT_THROW(apply_config_json(cfg, R"({"alpha": 1.5})"), ConfigError);
    EXPECT_THROW(apply_config_json(cfg, R"({"port": "x"})"), ConfigError);
    EXPECT_THROW(apply_config_json(cfg, "not json"), ConfigError);
    EXPECT_THROW(apply_config_json(cfg, R"({"group_targets": ["happy"]})"), ConfigError);
}

TEST(Config, EnvOverridesFile) {
    ServiceConfig cfg;
    apply_config_json(cfg, R"({"port": 9000, "alpha": 0.25})");
    const std::map<std::string, std::string> env{{"AFFECTNAV_PORT", "9100"},
                                                 {"AFFECTNAV_DATA_DIR", "/srv/data"},
                                                 {"AFFECTNAV_IDLE_MODE", "stochastic"},
                                                 {"AFFECTNAV_SEED", "5"}};
    apply_env_overrides(cfg, [&](std::string_view name) -> std::optional<std::string> {
        const auto it = env.find(std::string(name));
        if (it == env.end()) return std::nullopt;
        return it->second;
    });
    EXPECT_EQ(cfg.port, 9100);
    EXPECT_EQ(cfg.engine.alpha, 0.25);
    EXPECT_EQ(cfg.data_dir, "/srv/data");
    EXPECT_EQ(cfg.engine.machine.idle_mode, IdleMode::kStochastic);
    EXPECT_EQ(cfg.engine.machine.seed, 5u);
    EXPECT_EQ(cfg.transition_table_path(), std::filesystem::path("/srv/data/transition_table.tsv"));
}

TEST(Config, BuildEngineFromBundledData) {
    testsupport::TempDir dir;
    const auto cfg = testsupport::config_in(dir.path());
    const Engine engine = build_engine(cfg);
    EXPECT_EQ(engine.catalog().size(), 10u);
    EXPECT_NEAR(engine.seed_model().cost(MentalState::kQuiet, MentalState::kHappy), 0.787, 1e-9);
    EXPECT_EQ(engine.fv_store().lookup("okonomiyaki").value, 0.8);
}
