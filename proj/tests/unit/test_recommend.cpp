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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "affectnav/errors.hpp"
#include "affectnav/recommend.hpp"
#include "../oracles/oracles.hpp"

using namespace affectnav;

namespace {

FeelingVector6 fv6(double happy, double angry, double surprise, double sad, double disgust, double fear) {
    return FeelingVector6{{happy, angry, surprise, sad, disgust, fear}};
}

SpotProfile spot(std::string name, FeelingVector6 p, GeoPoint at = {34.39, 132.46}) {
    return SpotProfile{std::move(name), at, p, ""};
}

std::vector<SpotProfile> bundled_catalog() {
    return load_spot_catalog(std::string(AFFECTNAV_DATA_DIR) + "/spots.tsv");
}

std::vector<SpotProfile> parse(const std::string& text) {
    std::istringstream in(text);
    return parse_spot_catalog(in);
}

} // namespace

TEST(FeelingMapping, FromGroups) {
    EXPECT_EQ(feeling_vector_from_groups(GroupVector{}), FeelingVector6{});
    GroupVector g;
    g.set(2, 0.8);
    EXPECT_EQ(feeling_vector_from_groups(g), fv6(0.8, 0, 0, 0, 0, 0));
    GroupVector h;
    h.set(3, 0.2);
    h.set(4, 0.6);
    EXPECT_EQ(feeling_vector_from_groups(h)[Feeling::kSad], 0.6);
    GroupVector all(std::array<double, 9>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
    EXPECT_EQ(feeling_vector_from_groups(all), fv6(0.2, 0.7, 0.9, 0.5, 0.6, 0.8));
}

TEST(AffectProfile, Smoothing) {
    UserAffectProfile p;
    EXPECT_EQ(update_user_profile(p, FeelingVector6{}).current, FeelingVector6{});
    p.current = fv6(0.8, 0, 0, 0, 0, 0);
    EXPECT_DOUBLE_EQ(update_user_profile(p, FeelingVector6{}).current[Feeling::kHappy], 0.4);
    p.alpha = 1.0;
    const auto v = fv6(0.1, 0.2, 0.3, 0.4, 0.5, 0.6);
    EXPECT_EQ(update_user_profile(p, v).current, v);
    p.alpha = 0.0;
    EXPECT_THROW((void)update_user_profile(p, v), RangeError);
    p.alpha = 0.5;
    EXPECT_THROW((void)update_user_profile(p, fv6(1.2, 0, 0, 0, 0, 0)), RangeError);
}

TEST(Geo, Haversine) {
    EXPECT_EQ(haversine_km({34.0, 132.0}, {34.0, 132.0}), 0.0);
    // One degree of latitude is about 111.2 km.
    EXPECT_NEAR(haversine_km({0, 0}, {1, 0}), 111.195, 0.01);
    EXPECT_NEAR(haversine_km({34.2960, 132.3198}, {34.3955, 132.4536}), haversine_km({34.3955, 132.4536}, {34.2960, 132.3198}),
                1e-12);
}

TEST(Ranking, MiyajimaIdentity) {
    const auto catalog = bundled_catalog();
    UserAffectProfile user;
    user.current = fv6(0.789, 0.039, 0.421, 0.079, 0.039, 0.079);
    const auto ranked = rank_spots(user, catalog);
    ASSERT_FALSE(ranked.empty());
    EXPECT_EQ(ranked.front().spot.name, "Miyajima");
    EXPECT_EQ(ranked.front().profile_distance, 0.0);
}

TEST(Ranking, TwoSpotsMatchOracle) {
    const std::vector<SpotProfile> catalog{spot("b", fv6(0.5, 0.5, 0, 0, 0, 0)), spot("a", fv6(0.9, 0, 0, 0, 0, 0))};
    UserAffectProfile user;
    user.current = fv6(0.8, 0.1, 0, 0, 0, 0);
    const auto ranked = rank_spots(user, catalog);
    const auto expected = oracle::full_scan_order(user.current.values, {{"b", catalog[0].profile.values},
                                                                       {"a", catalog[1].profile.values}});
    ASSERT_EQ(ranked.size(), 2u);
    EXPECT_EQ(ranked[0].spot.name, expected[0]);
    EXPECT_EQ(ranked[1].spot.name, expected[1]);
}

TEST(Ranking, TiesByName) {
    const std::vector<SpotProfile> catalog{spot("zeta", fv6(0.5, 0, 0, 0, 0, 0)), spot("alpha", fv6(0.5, 0, 0, 0, 0, 0))};
    const auto ranked = rank_spots(UserAffectProfile{}, catalog);
    EXPECT_EQ(ranked[0].spot.name, "alpha");
}

TEST(Ranking, RadiusFilter) {
    const auto catalog = bundled_catalog();
    RankQuery q;
    q.here = GeoPoint{34.3955, 132.4536}; // the Dome itself
    q.radius_km = 0.0;
    const auto only = rank_spots(UserAffectProfile{}, catalog, q);
    ASSERT_EQ(only.size(), 1u);
    EXPECT_EQ(only[0].spot.name, "Atomic Bomb Dome");
    EXPECT_EQ(*only[0].km, 0.0);

    q.here = GeoPoint{35.0, 135.0};
    EXPECT_THROW((void)rank_spots(UserAffectProfile{}, catalog, q), EmptyCatalog);

    q.here = GeoPoint{34.3955, 132.4536};
    q.radius_km = 5.0;
    for (const auto& r : rank_spots(UserAffectProfile{}, catalog, q)) {
        ASSERT_TRUE(r.km.has_value());
        EXPECT_LE(*r.km, 5.0);
    }
    q.radius_km.reset();
    EXPECT_EQ(rank_spots(UserAffectProfile{}, catalog, q).size(), catalog.size());
}

TEST(Ranking, CosineMetric) {
    const std::vector<SpotProfile> catalog{spot("same-direction", fv6(0.2, 0, 0, 0, 0, 0)),
                                           spot("closer", fv6(0.7, 0.3, 0, 0, 0, 0))};
    UserAffectProfile user;
    user.current = fv6(0.8, 0, 0, 0, 0, 0);
    RankQuery q;
    EXPECT_EQ(rank_spots(user, catalog, q)[0].spot.name, "closer");
    q.metric = ProfileMetric::kCosine;
    const auto ranked = rank_spots(user, catalog, q);
    EXPECT_EQ(ranked[0].spot.name, "same-direction");
    EXPECT_NEAR(ranked[0].profile_distance, 0.0, 1e-12);
    EXPECT_EQ(profile_distance(FeelingVector6{}, fv6(1, 0, 0, 0, 0, 0), ProfileMetric::kCosine), 1.0);
}

TEST(Ranking, RandomCatalogsMatchOracle) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 50; ++n) {
        std::vector<SpotProfile> catalog;
        std::vector<oracle::PlainSpot> plain;
        const int size = 1 + static_cast<int>(rng() % 15);
        for (int i = 0; i < size; ++i) {
            FeelingVector6 p;
            // Coarse grades make exact ties common.
            for (double& x : p.values) x = static_cast<double>(rng() % 5) / 4.0;
            const std::string name = "spot" + std::to_string(rng() % 1000);
            catalog.push_back(spot(name, p));
            plain.push_back({name, p.values});
        }
        UserAffectProfile user;
        for (double& x : user.current.values) x = static_cast<double>(rng() % 5) / 4.0;
        const auto ranked = rank_spots(user, catalog);
        const auto expected = oracle::full_scan_order(user.current.values, plain);
        ASSERT_EQ(ranked.size(), expected.size());
        for (std::size_t i = 0; i < ranked.size(); ++i) EXPECT_EQ(ranked[i].spot.name, expected[i]);
    }
}

TEST(Catalog, BundledFixture) {
    const auto catalog = bundled_catalog();
    EXPECT_EQ(catalog.size(), 10u);
    const auto it = std::find_if(catalog.begin(), catalog.end(), [](const auto& s) { return s.name == "Miyajima"; });
    ASSERT_NE(it, catalog.end());
    EXPECT_EQ(it->profile, fv6(0.789, 0.039, 0.421, 0.079, 0.039, 0.079));
}

TEST(Catalog, Errors) {
    EXPECT_THROW((void)parse("X\t34\t132\t5 0 0 0 0 0\tbad grade\n"), RangeError);
    EXPECT_THROW((void)parse("X\t34\t200\t1 0 0 0 0 0\tbad lon\n"), RangeError);
    EXPECT_THROW((void)parse("X\t34\t132\t1 0 0 0 0\tfive grades\n"), FormatError);
    EXPECT_THROW((void)parse("X\t34\t132\n"), FormatError);
    try {
        (void)parse("# c\nX\t34\t132\t1 0 0 0 0 0\td\nX\t34\t132\t1 0 0 0 0 0\td\n");
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(Catalog, EmptyFileRanksToEmptyCatalog) {
    const auto catalog = parse("");
    EXPECT_TRUE(catalog.empty());
    EXPECT_THROW((void)rank_spots(UserAffectProfile{}, catalog), EmptyCatalog);
}
