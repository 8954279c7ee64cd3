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

// Emotion generating calculations: map a case frame onto a point in a
// three-axis emotion space, then read pleasure or displeasure off the
// octant the point falls in.

#include <optional>
#include <string_view>

#include "affectnav/case_frame.hpp"
#include "affectnav/fv_store.hpp"

namespace affectnav {

enum class IntensityFormula {
    kGeometricMean, // |f1 f2 f3|^(1/3)
    kEuclidean,     // |v| / sqrt(3)
};

// How to read the two-line V(S,O) row.
enum class SubjectObjectReading {
    kSubjectObject, // (f_S, f_O, f_P)
    kObjectOnly,    // (f_O, beta, f_P)
};

// Third axis of V(S,O,OM): printed as f_O, arguably meant to be f_P.
enum class ObjectMutualThirdAxis { kAsPrinted, kPredicate };

struct EgcConfig {
    double beta = 0.5;
    IntensityFormula intensity = IntensityFormula::kGeometricMean;
    SubjectObjectReading subject_object = SubjectObjectReading::kSubjectObject;
    ObjectMutualThirdAxis object_mutual_f3 = ObjectMutualThirdAxis::kAsPrinted;
};

// Favorite values of every role a signature may reference. Roles missing
// from a frame are 0.0.
struct RoleValues {
    double s = 0.0;
    double o = 0.0;
    double of = 0.0;
    double ot = 0.0;
    double om = 0.0;
    double os = 0.0;
    double oc = 0.0;
    double i = 0.0;
    double p = 0.0;
};

struct AxisAssignment {
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
    bool used_beta = false;

    friend bool operator==(const AxisAssignment&, const AxisAssignment&) = default;
};

// kOnAxis when any component is exactly zero.
enum class Area { kOnAxis, kI, kII, kIII, kIV, kV, kVI, kVII, kVIII };

enum class Valence { kNone, kPleasure, kDispleasure };

[[nodiscard]] std::string_view area_name(Area area) noexcept;
[[nodiscard]] std::string_view valence_name(Valence valence) noexcept;

struct OctantClass {
    Area area = Area::kOnAxis;
    Valence valence = Valence::kNone;

    friend bool operator==(const OctantClass&, const OctantClass&) = default;
};

struct EgcResult {
    AxisAssignment vector;
    Area area = Area::kOnAxis;
    Valence valence = Valence::kNone;
    double intensity = 0.0;

    friend bool operator==(const EgcResult&, const EgcResult&) = default;
};

[[nodiscard]] AxisAssignment axes_for(Signature signature, const RoleValues& fv, const EgcConfig& config = {});

[[nodiscard]] RoleValues resolve_role_values(const CaseFrame& frame, const FvDatabase& db,
                                             std::optional<std::string_view> persona);

[[nodiscard]] AxisAssignment assign_axes(const CaseFrame& frame, const FvDatabase& db,
                                         std::optional<std::string_view> persona, const EgcConfig& config = {});

[[nodiscard]] OctantClass classify_octant(const AxisAssignment& v) noexcept;

[[nodiscard]] double intensity(const AxisAssignment& v,
                               IntensityFormula formula = IntensityFormula::kGeometricMean) noexcept;

[[nodiscard]] EgcResult egc_evaluate(const CaseFrame& frame, const FvDatabase& db,
                                     std::optional<std::string_view> persona, const EgcConfig& config = {});

} // namespace affectnav
