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

#include "affectnav/egc.hpp"

#include <cmath>

namespace affectnav {

std::string_view area_name(Area area) noexcept {
    switch (area) {
    case Area::kI: return "I";
    case Area::kII: return "II";
    case Area::kIII: return "III";
    case Area::kIV: return "IV";
    case Area::kV: return "V";
    case Area::kVI: return "VI";
    case Area::kVII: return "VII";
    case Area::kVIII: return "VIII";
    case Area::kOnAxis: break;
    }
    return "on-axis";
}

std::string_view valence_name(Valence valence) noexcept {
    switch (valence) {
    case Valence::kPleasure: return "pleasure";
    case Valence::kDispleasure: return "displeasure";
    case Valence::kNone: break;
    }
    return "none";
}

AxisAssignment axes_for(Signature signature, const RoleValues& fv, const EgcConfig& config) {
    const double beta = config.beta;
    switch (signature) {
    case Signature::V_S:
    case Signature::A_S_C:
    case Signature::A_S_OF_C:
    case Signature::A_S_OT_C:
    case Signature::A_S_OM_C:
    case Signature::A_S_OS_C:
        return {fv.s, beta, fv.p, true};
    case Signature::V_S_OF:
    case Signature::V_S_OT:
        return {fv.s, fv.ot - fv.of, fv.p, false};
    case Signature::V_S_OM:
        return {fv.s, fv.om, fv.p, false};
    case Signature::V_S_OS:
        return {fv.s - fv.os, beta, fv.p, true};
    case Signature::V_S_O:
        if (config.subject_object == SubjectObjectReading::kObjectOnly) return {fv.o, beta, fv.p, true};
        return {fv.s, fv.o, fv.p, false};
    case Signature::V_S_O_OF:
    case Signature::V_S_O_OT:
        return {fv.o, fv.ot - fv.of, fv.p, false};
    case Signature::V_S_O_OM:
        return {fv.o, fv.om, config.object_mutual_f3 == ObjectMutualThirdAxis::kPredicate ? fv.p : fv.o, false};
    case Signature::V_S_O_I:
        return {fv.o, fv.i, fv.p, false};
    case Signature::V_S_O_OC:
        return {fv.o, beta, fv.oc, true};
    case Signature::A_S_O_C:
        return {fv.o, beta, fv.p, true};
    }
    return {};
}

RoleValues resolve_role_values(const CaseFrame& frame, const FvDatabase& db, std::optional<std::string_view> persona) {
    const auto value_of = [&](SlotRole role) {
        const std::string* term = frame.slot(role);
        return term ? db.lookup(*term, persona).value : 0.0;
    };
    RoleValues fv;
    fv.s = value_of(SlotRole::kS);
    fv.o = value_of(SlotRole::kO);
    fv.of = value_of(SlotRole::kOF);
    fv.ot = value_of(SlotRole::kOT);
    fv.om = value_of(SlotRole::kOM);
    fv.os = value_of(SlotRole::kOS);
    fv.oc = value_of(SlotRole::kOC);
    fv.i = value_of(SlotRole::kI);
    fv.p = db.lookup(frame.predicate, persona).value;
    return fv;
}

AxisAssignment assign_axes(const CaseFrame& frame, const FvDatabase& db, std::optional<std::string_view> persona,
                           const EgcConfig& config) {
    return axes_for(signature_of(frame), resolve_role_values(frame, db, persona), config);
}

OctantClass classify_octant(const AxisAssignment& v) noexcept {
    if (v.f1 == 0.0 || v.f2 == 0.0 || v.f3 == 0.0) return {Area::kOnAxis, Valence::kNone};
    const bool p1 = v.f1 > 0.0;
    const bool p2 = v.f2 > 0.0;
    const bool p3 = v.f3 > 0.0;
    Area area = Area::kOnAxis;
    if (p3) {
        area = p2 ? (p1 ? Area::kI : Area::kII) : (p1 ? Area::kIV : Area::kIII);
    } else {
        area = p2 ? (p1 ? Area::kV : Area::kVI) : (p1 ? Area::kVIII : Area::kVII);
    }
    // The pleasure areas are exactly those with f1*f2*f3 > 0.
    switch (area) {
    case Area::kI:
    case Area::kIII:
    case Area::kVI:
    case Area::kVIII:
        return {area, Valence::kPleasure};
    default:
        return {area, Valence::kDispleasure};
    }
}

double intensity(const AxisAssignment& v, IntensityFormula formula) noexcept {
    if (v.f1 == 0.0 || v.f2 == 0.0 || v.f3 == 0.0) return 0.0;
    if (formula == IntensityFormula::kEuclidean) {
        return std::sqrt(v.f1 * v.f1 + v.f2 * v.f2 + v.f3 * v.f3) / std::sqrt(3.0);
    }
    return std::cbrt(std::abs(v.f1 * v.f2 * v.f3));
}

EgcResult egc_evaluate(const CaseFrame& frame, const FvDatabase& db, std::optional<std::string_view> persona,
                       const EgcConfig& config) {
    EgcResult result;
    result.vector = assign_axes(frame, db, persona, config);
    const auto octant = classify_octant(result.vector);
    result.area = octant.area;
    result.valence = octant.valence;
    result.intensity = intensity(result.vector, config.intensity);
    return result;
}

} // namespace affectnav
