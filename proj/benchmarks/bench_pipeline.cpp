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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>
#include <vector>

#include "affectnav/case_frame.hpp"
#include "affectnav/egc.hpp"
#include "affectnav/fv_store.hpp"
#include "affectnav/mstn.hpp"
#include "affectnav/recommend.hpp"

using namespace affectnav;

namespace {

const std::filesystem::path kData = AFFECTNAV_DATA_DIR;

TransitionModel bundled_model() {
    return seed_from_table(load_transition_table(kData / "transition_table.tsv").values);
}

std::vector<GroupVector> random_groups(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<GroupVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::array<double, 9> e{};
        for (double& x : e) x = u(rng);
        out.emplace_back(e);
    }
    return out;
}

void BM_SelectTransition(benchmark::State& state) {
    const auto model = bundled_model();
    const auto targets = default_group_targets();
    const auto inputs = random_groups(1024);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& e = inputs[i++ & 1023];
        benchmark::DoNotOptimize(select_transition(model, targets, MentalState::kQuiet, e));
    }
}
BENCHMARK(BM_SelectTransition);

void BM_NextStateLearning(benchmark::State& state) {
    StateMachine machine(bundled_model());
    const auto inputs = random_groups(1024);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(machine.next_state(inputs[i++ & 1023]));
}
BENCHMARK(BM_NextStateLearning);

void BM_ParseCaseFrame(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_case_frame("V(S:guide, O:camera, OT:friend, P:give) +liking"));
    }
}
BENCHMARK(BM_ParseCaseFrame);

void BM_EgcEvaluate(benchmark::State& state) {
    const auto db = load_fv_file(kData / "fv.tsv");
    const auto frame = parse_case_frame("V(S:I, O:okonomiyaki, P:eat)");
    for (auto _ : state) benchmark::DoNotOptimize(egc_evaluate(frame, db, std::nullopt));
}
BENCHMARK(BM_EgcEvaluate);

void BM_RankSpots(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<SpotProfile> catalog(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        catalog[i].name = "spot" + std::to_string(i);
        catalog[i].location = {34.0 + u(rng), 132.0 + u(rng)};
        for (double& x : catalog[i].profile.values) x = u(rng);
    }
    UserAffectProfile user;
    for (double& x : user.current.values) x = u(rng);
    RankQuery q;
    q.here = GeoPoint{34.4, 132.45};
    q.radius_km = 60.0;
    for (auto _ : state) benchmark::DoNotOptimize(rank_spots(user, catalog, q));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RankSpots)->Arg(10)->Arg(1000)->Arg(100000);

} // namespace

BENCHMARK_MAIN();
