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

// Case-frame notation
// -------------------
// A frame is written as a kind letter followed by a parenthesized list of
// ROLE:token pairs, optionally followed by lexical emotion tags:
//
//     V(S:I, O:cake, P:eat)
//     A(S:scenery, C:beautiful) +love
//     V(S:train, P:arrive)!
//
//   kind    V (verb event, predicate in P) or A (attribute event, predicate in C)
//   roles   S O OF OT OM OS OC I, plus P (verbs) or C (attributes)
//   tokens  opaque, case-sensitive; may not contain ( ) , : + !
//   tags    `+name` for liking, love, shy, sadness, perplexity, hate,
//           reproach, surprise; a bare `!` is shorthand for +surprise
//
// The slot set, excluding the predicate, must match one of the event-type
// signatures returned by all_signatures().

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affectnav/emotion_types.hpp"

namespace affectnav {

enum class EventKind { kVerb, kAttribute };

// Declaration order is the canonical rendering order.
enum class SlotRole { kS, kO, kOF, kOT, kOM, kOS, kOC, kI };

[[nodiscard]] std::string_view slot_role_name(SlotRole role) noexcept;
[[nodiscard]] std::optional<SlotRole> slot_role_from_name(std::string_view name) noexcept;

enum class Signature {
    V_S,
    A_S_C,
    A_S_OF_C,
    A_S_OT_C,
    A_S_OM_C,
    A_S_OS_C,
    V_S_OF,
    V_S_OT,
    V_S_OM,
    V_S_OS,
    V_S_O,
    V_S_O_OF,
    V_S_O_OT,
    V_S_O_OM,
    V_S_O_I,
    V_S_O_OC,
    A_S_O_C,
};

inline constexpr std::size_t kSignatureCount = 17;

struct EventTypeSignature {
    Signature id;
    EventKind kind;
    std::vector<SlotRole> required; // canonical order, predicate excluded

    friend bool operator==(const EventTypeSignature&, const EventTypeSignature&) = default;
};

[[nodiscard]] std::span<const EventTypeSignature> all_signatures();
[[nodiscard]] const EventTypeSignature& signature_info(Signature id);
// "V(S,O,OC)", "A(S,C)", ...
[[nodiscard]] std::string signature_name(Signature id);

struct CaseFrame {
    EventKind kind = EventKind::kVerb;
    std::map<SlotRole, std::string> slots;
    std::string predicate;
    std::vector<EmotionType> tags; // sorted, unique

    [[nodiscard]] const std::string* slot(SlotRole role) const;

    friend bool operator==(const CaseFrame&, const CaseFrame&) = default;
};

// Throws SyntaxError, UnknownSignature or DuplicateSlot.
[[nodiscard]] CaseFrame parse_case_frame(std::string_view text);

// Frames produced by parse_case_frame always have a signature.
[[nodiscard]] Signature signature_of(const CaseFrame& frame);

// Lookup over raw slot sets; nullopt when no signature matches.
[[nodiscard]] std::optional<Signature> match_signature(EventKind kind, std::span<const SlotRole> roles);

// Canonical notation; parse_case_frame(render_case_frame(f)) == f.
[[nodiscard]] std::string render_case_frame(const CaseFrame& frame);

} // namespace affectnav
