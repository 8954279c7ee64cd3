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

#include "affectnav/emotion_types.hpp"

#include <algorithm>
#include <string>

namespace affectnav {
namespace {

struct EmotionInfo {
    EmotionType type;
    std::string_view name;
    int group;
    bool appraisal;
};

constexpr std::array<EmotionInfo, kEmotionTypeCount> kEmotions{{
    {EmotionType::kGloating, "gloating", 1, true},
    {EmotionType::kHope, "hope", 1, true},
    {EmotionType::kSatisfaction, "satisfaction", 1, true},
    {EmotionType::kRelief, "relief", 1, true},
    {EmotionType::kPride, "pride", 1, true},
    {EmotionType::kAdmiration, "admiration", 1, true},
    {EmotionType::kLiking, "liking", 1, false},
    {EmotionType::kGratitude, "gratitude", 1, true},
    {EmotionType::kGratification, "gratification", 1, true},
    {EmotionType::kLove, "love", 1, false},
    {EmotionType::kShy, "shy", 1, false},
    {EmotionType::kJoy, "joy", 2, true},
    {EmotionType::kHappyFor, "happy-for", 2, true},
    {EmotionType::kSorryFor, "sorry-for", 3, true},
    {EmotionType::kShame, "shame", 3, true},
    {EmotionType::kRemorse, "remorse", 3, true},
    {EmotionType::kFearsConfirmed, "fears-confirmed", 4, true},
    {EmotionType::kDisappointment, "disappointment", 4, true},
    {EmotionType::kSadness, "sadness", 4, false},
    {EmotionType::kDistress, "distress", 5, true},
    {EmotionType::kPerplexity, "perplexity", 5, false},
    {EmotionType::kDisliking, "disliking", 6, true},
    {EmotionType::kHate, "hate", 6, false},
    {EmotionType::kResentment, "resentment", 7, true},
    {EmotionType::kReproach, "reproach", 7, false},
    {EmotionType::kAnger, "anger", 7, true},
    {EmotionType::kFear, "fear", 8, true},
    {EmotionType::kSurprise, "surprise", 9, false},
}};

constexpr const EmotionInfo& info(EmotionType type) noexcept {
    return kEmotions[static_cast<std::size_t>(type)];
}

} // namespace

const std::array<EmotionType, kEmotionTypeCount>& all_emotion_types() noexcept {
    static const auto types = [] {
        std::array<EmotionType, kEmotionTypeCount> out{};
        std::transform(kEmotions.begin(), kEmotions.end(), out.begin(),
                       [](const EmotionInfo& e) { return e.type; });
        return out;
    }();
    return types;
}

std::string_view emotion_name(EmotionType type) noexcept { return info(type).name; }

std::optional<EmotionType> emotion_from_name(std::string_view name) noexcept {
    std::string normalized(name);
    std::replace(normalized.begin(), normalized.end(), '_', '-');
    // Group listings use the singular "fear-confirmed".
    if (normalized == "fear-confirmed") normalized = "fears-confirmed";
    for (const auto& e : kEmotions) {
        if (e.name == normalized) return e.type;
    }
    return std::nullopt;
}

int emotion_group(EmotionType type) noexcept { return info(type).group; }

bool is_appraisal_type(EmotionType type) noexcept { return info(type).appraisal; }

} // namespace affectnav
