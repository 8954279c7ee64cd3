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

// User affect profile and sightseeing-spot ranking by feeling-profile
// proximity, with an optional great-circle radius filter.
//
// Spot catalog format (one spot per line, '#' comment lines):
//
//     name TAB lat TAB lon TAB happy angry surprise sad disgust fear TAB description
//
// The six grades are questionnaire averages on the 0..4 scale, separated by
// spaces; they are divided by 4 on load.

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affectnav/elicitation.hpp"

namespace affectnav {

enum class Feeling { kHappy, kAngry, kSurprise, kSad, kDisgust, kFear };

inline constexpr std::size_t kFeelingCount = 6;

[[nodiscard]] std::string_view feeling_name(Feeling f) noexcept;

struct FeelingVector6 {
    std::array<double, kFeelingCount> values{};

    [[nodiscard]] double operator[](Feeling f) const noexcept { return values[static_cast<std::size_t>(f)]; }
    [[nodiscard]] double& operator[](Feeling f) noexcept { return values[static_cast<std::size_t>(f)]; }

    friend bool operator==(const FeelingVector6&, const FeelingVector6&) = default;
};

struct GeoPoint {
    double lat = 0.0;
    double lon = 0.0;

    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

inline constexpr double kMaxGrade = 4.0;

struct SpotProfile {
    std::string name;
    GeoPoint location;
    FeelingVector6 profile; // grades / 4
    std::string description;

    friend bool operator==(const SpotProfile&, const SpotProfile&) = default;
};

struct UserAffectProfile {
    FeelingVector6 current;
    double alpha = 0.5; // smoothing weight of the newest observation, in (0, 1]
};

enum class ProfileMetric { kEuclidean, kCosine };

[[nodiscard]] std::string_view profile_metric_name(ProfileMetric m) noexcept;
[[nodiscard]] std::optional<ProfileMetric> profile_metric_from_name(std::string_view s) noexcept;

// happy = max(e1, e2), sad = max(e3, e4, e5), disgust = e6, angry = e7,
// fear = e8, surprise = e9.
[[nodiscard]] FeelingVector6 feeling_vector_from_groups(const GroupVector& e) noexcept;

// current <- alpha * v + (1 - alpha) * current. Throws RangeError when alpha
// is outside (0, 1] or v leaves [0, 1].
[[nodiscard]] UserAffectProfile update_user_profile(const UserAffectProfile& p, const FeelingVector6& v);

[[nodiscard]] double haversine_km(GeoPoint a, GeoPoint b) noexcept;

[[nodiscard]] double profile_distance(const FeelingVector6& a, const FeelingVector6& b,
                                      ProfileMetric metric = ProfileMetric::kEuclidean) noexcept;

struct RankedSpot {
    SpotProfile spot;
    double profile_distance = 0.0;
    std::optional<double> km; // set when a location was supplied
};

struct RankQuery {
    std::optional<GeoPoint> here;
    std::optional<double> radius_km; // ignored without `here`
    ProfileMetric metric = ProfileMetric::kEuclidean;
};

// Spots within the radius, ascending by profile distance, ties by name.
// Throws EmptyCatalog when nothing passes the filter.
[[nodiscard]] std::vector<RankedSpot> rank_spots(const UserAffectProfile& p, std::span<const SpotProfile> catalog,
                                                 const RankQuery& query = {});

// Throws FormatError (with line) or RangeError (grade outside 0..4,
// coordinates out of range).
[[nodiscard]] std::vector<SpotProfile> parse_spot_catalog(std::istream& in);
[[nodiscard]] std::vector<SpotProfile> load_spot_catalog(const std::filesystem::path& path);

} // namespace affectnav
