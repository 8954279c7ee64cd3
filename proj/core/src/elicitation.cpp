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

#include "affectnav/elicitation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "affectnav/errors.hpp"

namespace affectnav {

std::string_view party_name(Party p) noexcept { return p == Party::kSelf ? "self" : "other"; }

std::string_view desirability_name(Desirability d) noexcept {
    switch (d) {
    case Desirability::kDesirable: return "desirable";
    case Desirability::kUndesirable: return "undesirable";
    case Desirability::kNotApplicable: break;
    }
    return "na";
}

std::string_view prospect_name(Prospect p) noexcept {
    switch (p) {
    case Prospect::kProspective: return "prospective";
    case Prospect::kConfirmed: return "confirmed";
    case Prospect::kDisconfirmed: return "disconfirmed";
    case Prospect::kNone: break;
    }
    return "none";
}

std::string_view approval_name(Approval a) noexcept {
    switch (a) {
    case Approval::kApprove: return "approve";
    case Approval::kDisapprove: return "disapprove";
    case Approval::kNotApplicable: break;
    }
    return "na";
}

std::optional<Party> party_from_name(std::string_view s) noexcept {
    if (s == "self") return Party::kSelf;
    if (s == "other") return Party::kOther;
    return std::nullopt;
}

std::optional<Desirability> desirability_from_name(std::string_view s) noexcept {
    if (s == "desirable") return Desirability::kDesirable;
    if (s == "undesirable") return Desirability::kUndesirable;
    if (s == "na") return Desirability::kNotApplicable;
    return std::nullopt;
}

std::optional<Prospect> prospect_from_name(std::string_view s) noexcept {
    if (s == "none") return Prospect::kNone;
    if (s == "prospective") return Prospect::kProspective;
    if (s == "confirmed") return Prospect::kConfirmed;
    if (s == "disconfirmed") return Prospect::kDisconfirmed;
    return std::nullopt;
}

std::optional<Approval> approval_from_name(std::string_view s) noexcept {
    if (s == "approve") return Approval::kApprove;
    if (s == "disapprove") return Approval::kDisapprove;
    if (s == "na") return Approval::kNotApplicable;
    return std::nullopt;
}

std::vector<EmotionInstance> elicit_emotions(const EgcResult& result, const ElicitationContext& ctx,
                                             bool prospect_pending, std::span<const EmotionType> lexical_tags) {
    const bool confirming = ctx.prospect == Prospect::kConfirmed || ctx.prospect == Prospect::kDisconfirmed;
    if (confirming && !prospect_pending) {
        throw ContextError(std::string(prospect_name(ctx.prospect)) + " event without a prior prospective event");
    }

    std::vector<EmotionInstance> out;
    if (result.valence == Valence::kNone) return out;

    const double strength = std::clamp(result.intensity, 0.0, 1.0);
    const bool pleasure = result.valence == Valence::kPleasure;

    std::optional<EmotionType> attribution;
    if (ctx.approval != Approval::kNotApplicable) {
        const bool self = ctx.agent == Party::kSelf;
        if (ctx.approval == Approval::kApprove) {
            attribution = self ? EmotionType::kPride : EmotionType::kAdmiration;
        } else {
            attribution = self ? EmotionType::kShame : EmotionType::kDisliking;
        }
        out.push_back({*attribution, strength});
    }

    std::optional<EmotionType> well_being;
    if (ctx.prospect == Prospect::kProspective) {
        out.push_back({pleasure ? EmotionType::kHope : EmotionType::kFear, strength});
    } else if (ctx.prospect == Prospect::kConfirmed) {
        out.push_back({pleasure ? EmotionType::kSatisfaction : EmotionType::kFearsConfirmed, strength});
    } else if (ctx.prospect == Prospect::kDisconfirmed) {
        out.push_back({pleasure ? EmotionType::kRelief : EmotionType::kDisappointment, strength});
    } else if (ctx.affected == Party::kOther && ctx.desirability_for_other != Desirability::kNotApplicable) {
        const bool desirable = ctx.desirability_for_other == Desirability::kDesirable;
        EmotionType type{};
        if (pleasure) {
            type = desirable ? EmotionType::kHappyFor : EmotionType::kGloating;
        } else {
            type = desirable ? EmotionType::kResentment : EmotionType::kSorryFor;
        }
        out.push_back({type, strength});
    } else {
        well_being = pleasure ? EmotionType::kJoy : EmotionType::kDistress;
        out.push_back({*well_being, strength});
    }

    if (attribution && well_being) {
        std::optional<EmotionType> compound;
        if (*attribution == EmotionType::kAdmiration && *well_being == EmotionType::kJoy) {
            compound = EmotionType::kGratitude;
        } else if (*attribution == EmotionType::kDisliking && *well_being == EmotionType::kDistress) {
            compound = EmotionType::kAnger;
        } else if (*attribution == EmotionType::kPride && *well_being == EmotionType::kJoy) {
            compound = EmotionType::kGratification;
        } else if (*attribution == EmotionType::kShame && *well_being == EmotionType::kDistress) {
            compound = EmotionType::kRemorse;
        }
        // out holds exactly the two bases at this point.
        if (compound) out.push_back({*compound, std::min(out.front().strength, out.back().strength)});
    }

    for (const auto tag : lexical_tags) out.push_back({tag, strength});
    return out;
}

GroupVector::GroupVector(const std::array<double, kEmotionGroupCount>& values) : values_(values) {
    for (const double v : values_) {
        if (!(v >= 0.0 && v <= 1.0)) throw RangeError("group strength outside [0, 1]");
    }
}

void GroupVector::set(int group, double value) {
    if (!(value >= 0.0 && value <= 1.0)) throw RangeError("group strength outside [0, 1]");
    values_.at(static_cast<std::size_t>(group - 1)) = value;
}

bool GroupVector::any_positive() const noexcept {
    return std::any_of(values_.begin(), values_.end(), [](double v) { return v > 0.0; });
}

GroupVector group_vector(std::span<const EmotionInstance> instances) {
    std::array<double, kEmotionGroupCount> e{};
    for (const auto& inst : instances) {
        auto& slot = e[static_cast<std::size_t>(emotion_group(inst.type) - 1)];
        slot = std::max(slot, std::clamp(inst.strength, 0.0, 1.0));
    }
    return GroupVector(e);
}

} // namespace affectnav
