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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace affectnav {

// The 28 generated emotion types, listed in emotion-group order (groups 1..9).
enum class EmotionType {
    // group 1
    kGloating,
    kHope,
    kSatisfaction,
    kRelief,
    kPride,
    kAdmiration,
    kLiking,
    kGratitude,
    kGratification,
    kLove,
    kShy,
    // group 2
    kJoy,
    kHappyFor,
    // group 3
    kSorryFor,
    kShame,
    kRemorse,
    // group 4
    kFearsConfirmed,
    kDisappointment,
    kSadness,
    // group 5
    kDistress,
    kPerplexity,
    // group 6
    kDisliking,
    kHate,
    // group 7
    kResentment,
    kReproach,
    kAnger,
    // group 8
    kFear,
    // group 9
    kSurprise,
};

inline constexpr std::size_t kEmotionTypeCount = 28;
inline constexpr std::size_t kEmotionGroupCount = 9;

[[nodiscard]] const std::array<EmotionType, kEmotionTypeCount>& all_emotion_types() noexcept;

// Hyphenated lower-case name, e.g. "happy-for", "fears-confirmed".
[[nodiscard]] std::string_view emotion_name(EmotionType type) noexcept;

// Accepts the hyphenated name; underscores are accepted in place of hyphens.
[[nodiscard]] std::optional<EmotionType> emotion_from_name(std::string_view name) noexcept;

// Emotion group number in 1..9.
[[nodiscard]] int emotion_group(EmotionType type) noexcept;

// True for the 20 types produced by the appraisal rule table; the other
// 8 are reachable only through lexical tags on a case frame.
[[nodiscard]] bool is_appraisal_type(EmotionType type) noexcept;

} // namespace affectnav
