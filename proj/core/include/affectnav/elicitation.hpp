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

// Refines a pleasure/displeasure judgement into specific emotion types and
// folds them into the nine emotion-group strengths.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "affectnav/egc.hpp"
#include "affectnav/emotion_types.hpp"

namespace affectnav {

enum class Party { kSelf, kOther };
enum class Desirability { kNotApplicable, kDesirable, kUndesirable };
enum class Prospect { kNone, kProspective, kConfirmed, kDisconfirmed };
enum class Approval { kNotApplicable, kApprove, kDisapprove };

struct ElicitationContext {
    Party agent = Party::kSelf;    // who performed the event
    Party affected = Party::kSelf; // whose fortunes the event touches
    Desirability desirability_for_other = Desirability::kNotApplicable;
    Prospect prospect = Prospect::kNone;
    Approval approval = Approval::kNotApplicable;

    friend bool operator==(const ElicitationContext&, const ElicitationContext&) = default;
};

[[nodiscard]] std::string_view party_name(Party p) noexcept;
[[nodiscard]] std::string_view desirability_name(Desirability d) noexcept;
[[nodiscard]] std::string_view prospect_name(Prospect p) noexcept;
[[nodiscard]] std::string_view approval_name(Approval a) noexcept;

[[nodiscard]] std::optional<Party> party_from_name(std::string_view s) noexcept;
[[nodiscard]] std::optional<Desirability> desirability_from_name(std::string_view s) noexcept;
[[nodiscard]] std::optional<Prospect> prospect_from_name(std::string_view s) noexcept;
[[nodiscard]] std::optional<Approval> approval_from_name(std::string_view s) noexcept;

struct EmotionInstance {
    EmotionType type;
    double strength = 0.0; // in [0, 1]

    friend bool operator==(const EmotionInstance&, const EmotionInstance&) = default;
};

// Output order: attribution type, the valence-driven type, compounds,
// then lexical tags. On-axis results produce no emotions.
//
// Throws ContextError when ctx.prospect is confirmed/disconfirmed and no
// prospective event is pending.
[[nodiscard]] std::vector<EmotionInstance> elicit_emotions(const EgcResult& result, const ElicitationContext& ctx,
                                                           bool prospect_pending = false,
                                                           std::span<const EmotionType> lexical_tags = {});

// Strengths e_1..e_9 of the nine emotion groups.
class GroupVector {
public:
    GroupVector() = default;
    explicit GroupVector(const std::array<double, kEmotionGroupCount>& values);

    // 1-based group index.
    [[nodiscard]] double e(int group) const { return values_.at(static_cast<std::size_t>(group - 1)); }
    void set(int group, double value);

    [[nodiscard]] const std::array<double, kEmotionGroupCount>& values() const noexcept { return values_; }
    [[nodiscard]] bool any_positive() const noexcept;

    friend bool operator==(const GroupVector&, const GroupVector&) = default;

private:
    std::array<double, kEmotionGroupCount> values_{};
};

// e_k = max strength over instances in group k, 0 when the group is empty.
[[nodiscard]] GroupVector group_vector(std::span<const EmotionInstance> instances);

} // namespace affectnav
