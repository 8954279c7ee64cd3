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

#include "affectnav/recommend.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "affectnav/errors.hpp"

namespace affectnav {
namespace {

constexpr double kEarthRadiusKm = 6371.0088;

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_number(std::string_view text, std::size_t line_no, const char* what) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw FormatError(std::string("invalid ") + what + " '" + std::string(text) + "'", line_no);
    }
    return v;
}

double radians(double deg) { return deg * std::numbers::pi / 180.0; }

} // namespace

std::string_view feeling_name(Feeling f) noexcept {
    static constexpr std::array<std::string_view, kFeelingCount> names{"happy", "angry",   "surprise",
                                                                       "sad",   "disgust", "fear"};
    return names[static_cast<std::size_t>(f)];
}

std::string_view profile_metric_name(ProfileMetric m) noexcept {
    return m == ProfileMetric::kCosine ? "cosine" : "euclidean";
}

std::optional<ProfileMetric> profile_metric_from_name(std::string_view s) noexcept {
    if (s == "euclidean") return ProfileMetric::kEuclidean;
    if (s == "cosine") return ProfileMetric::kCosine;
    return std::nullopt;
}

FeelingVector6 feeling_vector_from_groups(const GroupVector& e) noexcept {
    FeelingVector6 v;
    v[Feeling::kHappy] = std::max(e.e(1), e.e(2));
    v[Feeling::kSad] = std::max({e.e(3), e.e(4), e.e(5)});
    v[Feeling::kDisgust] = e.e(6);
    v[Feeling::kAngry] = e.e(7);
    v[Feeling::kFear] = e.e(8);
    v[Feeling::kSurprise] = e.e(9);
    return v;
}

UserAffectProfile update_user_profile(const UserAffectProfile& p, const FeelingVector6& v) {
    if (!(p.alpha > 0.0 && p.alpha <= 1.0)) throw RangeError("smoothing alpha must be in (0, 1]");
    UserAffectProfile next = p;
    for (std::size_t i = 0; i < kFeelingCount; ++i) {
        const double x = v.values[i];
        if (!(x >= 0.0 && x <= 1.0)) throw RangeError("feeling component outside [0, 1]");
        const double blended = p.alpha * x + (1.0 - p.alpha) * p.current.values[i];
        next.current.values[i] = std::clamp(blended, 0.0, 1.0);
    }
    return next;
}

double haversine_km(GeoPoint a, GeoPoint b) noexcept {
    const double dlat = radians(b.lat - a.lat);
    const double dlon = radians(b.lon - a.lon);
    const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(radians(a.lat)) * std::cos(radians(b.lat)) * std::sin(dlon / 2) * std::sin(dlon / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

double profile_distance(const FeelingVector6& a, const FeelingVector6& b, ProfileMetric metric) noexcept {
    if (metric == ProfileMetric::kCosine) {
        double dot = 0.0;
        double na = 0.0;
        double nb = 0.0;
        for (std::size_t i = 0; i < kFeelingCount; ++i) {
            dot += a.values[i] * b.values[i];
            na += a.values[i] * a.values[i];
            nb += b.values[i] * b.values[i];
        }
        // An all-zero profile has no direction; treat it as orthogonal.
        if (na == 0.0 || nb == 0.0) return 1.0;
        return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < kFeelingCount; ++i) {
        const double d = a.values[i] - b.values[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

std::vector<RankedSpot> rank_spots(const UserAffectProfile& p, std::span<const SpotProfile> catalog,
                                   const RankQuery& query) {
    std::vector<RankedSpot> out;
    out.reserve(catalog.size());
    for (const auto& spot : catalog) {
        RankedSpot r{spot, profile_distance(p.current, spot.profile, query.metric), std::nullopt};
        if (query.here) {
            r.km = haversine_km(*query.here, spot.location);
            if (query.radius_km && *r.km > *query.radius_km) continue;
        }
        out.push_back(std::move(r));
    }
    if (out.empty()) throw EmptyCatalog("no sightseeing spot passes the location filter");
    std::sort(out.begin(), out.end(), [](const RankedSpot& a, const RankedSpot& b) {
        if (a.profile_distance != b.profile_distance) return a.profile_distance < b.profile_distance;
        return a.spot.name < b.spot.name;
    });
    return out;
}

std::vector<SpotProfile> parse_spot_catalog(std::istream& in) {
    std::vector<SpotProfile> spots;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        const auto fields = split(line, '\t');
        if (fields.size() != 5) {
            throw FormatError("expected 5 tab-separated fields, got " + std::to_string(fields.size()), line_no);
        }
        SpotProfile spot;
        spot.name = std::string(fields[0]);
        if (spot.name.empty()) throw FormatError("empty spot name", line_no);
        if (std::any_of(spots.begin(), spots.end(), [&](const SpotProfile& s) { return s.name == spot.name; })) {
            throw FormatError("duplicate spot '" + spot.name + "'", line_no);
        }
        spot.location.lat = parse_number(fields[1], line_no, "latitude");
        spot.location.lon = parse_number(fields[2], line_no, "longitude");
        if (std::abs(spot.location.lat) > 90.0 || std::abs(spot.location.lon) > 180.0) {
            throw RangeError("line " + std::to_string(line_no) + ": coordinates out of range");
        }

        std::vector<std::string_view> grades;
        for (const auto g : split(fields[3], ' ')) {
            if (!g.empty()) grades.push_back(g);
        }
        if (grades.size() != kFeelingCount) {
            throw FormatError("expected 6 feeling grades, got " + std::to_string(grades.size()), line_no);
        }
        for (std::size_t i = 0; i < kFeelingCount; ++i) {
            const double g = parse_number(grades[i], line_no, "grade");
            if (g < 0.0 || g > kMaxGrade) {
                throw RangeError("line " + std::to_string(line_no) + ": grade " + std::string(grades[i]) +
                                 " outside 0..4");
            }
            spot.profile.values[i] = g / kMaxGrade;
        }
        spot.description = std::string(fields[4]);
        spots.push_back(std::move(spot));
    }
    return spots;
}

std::vector<SpotProfile> load_spot_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string(), 0);
    return parse_spot_catalog(in);
}

} // namespace affectnav
