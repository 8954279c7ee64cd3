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

#include "affectnav/case_frame.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "affectnav/errors.hpp"

namespace affectnav {
namespace {

constexpr std::array<std::string_view, 8> kRoleNames{"S", "O", "OF", "OT", "OM", "OS", "OC", "I"};

using R = SlotRole;

const std::vector<EventTypeSignature>& signature_table() {
    static const std::vector<EventTypeSignature> table{
        {Signature::V_S, EventKind::kVerb, {R::kS}},
        {Signature::A_S_C, EventKind::kAttribute, {R::kS}},
        {Signature::A_S_OF_C, EventKind::kAttribute, {R::kS, R::kOF}},
        {Signature::A_S_OT_C, EventKind::kAttribute, {R::kS, R::kOT}},
        {Signature::A_S_OM_C, EventKind::kAttribute, {R::kS, R::kOM}},
        {Signature::A_S_OS_C, EventKind::kAttribute, {R::kS, R::kOS}},
        {Signature::V_S_OF, EventKind::kVerb, {R::kS, R::kOF}},
        {Signature::V_S_OT, EventKind::kVerb, {R::kS, R::kOT}},
        {Signature::V_S_OM, EventKind::kVerb, {R::kS, R::kOM}},
        {Signature::V_S_OS, EventKind::kVerb, {R::kS, R::kOS}},
        {Signature::V_S_O, EventKind::kVerb, {R::kS, R::kO}},
        {Signature::V_S_O_OF, EventKind::kVerb, {R::kS, R::kO, R::kOF}},
        {Signature::V_S_O_OT, EventKind::kVerb, {R::kS, R::kO, R::kOT}},
        {Signature::V_S_O_OM, EventKind::kVerb, {R::kS, R::kO, R::kOM}},
        {Signature::V_S_O_I, EventKind::kVerb, {R::kS, R::kO, R::kI}},
        {Signature::V_S_O_OC, EventKind::kVerb, {R::kS, R::kO, R::kOC}},
        {Signature::A_S_O_C, EventKind::kAttribute, {R::kS, R::kO}},
    };
    return table;
}

bool is_token_char_forbidden(char c) {
    return c == '(' || c == ')' || c == ',' || c == ':' || c == '+' || c == '!';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }
    [[nodiscard]] std::size_t column() const { return pos_ + 1; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c, const char* what) {
        skip_space();
        if (peek() != c) fail(std::string("expected ") + what);
        ++pos_;
    }

    std::string_view word() {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                             text_[pos_] == '-')) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    // Reads up to the next ',' or ')' without consuming it.
    std::string_view token() {
        const std::size_t start = pos_;
        while (!at_end() && text_[pos_] != ',' && text_[pos_] != ')') {
            if (is_token_char_forbidden(text_[pos_])) fail(std::string("unexpected '") + text_[pos_] + "' in token");
            ++pos_;
        }
        if (at_end()) fail("unterminated frame, expected ')'");
        const auto tok = trim(text_.substr(start, pos_ - start));
        if (tok.empty()) {
            pos_ = start;
            fail("empty token");
        }
        return tok;
    }

    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, column()); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string kind_prefix(EventKind kind) { return kind == EventKind::kVerb ? "V" : "A"; }

} // namespace

std::string_view slot_role_name(SlotRole role) noexcept { return kRoleNames[static_cast<std::size_t>(role)]; }

std::optional<SlotRole> slot_role_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kRoleNames.size(); ++i) {
        if (kRoleNames[i] == name) return static_cast<SlotRole>(i);
    }
    return std::nullopt;
}

std::span<const EventTypeSignature> all_signatures() { return signature_table(); }

const EventTypeSignature& signature_info(Signature id) { return signature_table()[static_cast<std::size_t>(id)]; }

std::string signature_name(Signature id) {
    const auto& sig = signature_info(id);
    std::string out = kind_prefix(sig.kind) + "(";
    for (std::size_t i = 0; i < sig.required.size(); ++i) {
        if (i > 0) out += ',';
        out += slot_role_name(sig.required[i]);
    }
    if (sig.kind == EventKind::kAttribute) out += ",C";
    out += ')';
    return out;
}

const std::string* CaseFrame::slot(SlotRole role) const {
    const auto it = slots.find(role);
    return it == slots.end() ? nullptr : &it->second;
}

std::optional<Signature> match_signature(EventKind kind, std::span<const SlotRole> roles) {
    std::vector<SlotRole> sorted(roles.begin(), roles.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& sig : signature_table()) {
        if (sig.kind == kind && sig.required == sorted) return sig.id;
    }
    return std::nullopt;
}

CaseFrame parse_case_frame(std::string_view text) {
    Scanner in(text);
    in.skip_space();
    if (in.at_end()) in.fail("empty case frame");

    CaseFrame frame;
    const char kind = in.get();
    if (kind == 'V') {
        frame.kind = EventKind::kVerb;
    } else if (kind == 'A') {
        frame.kind = EventKind::kAttribute;
    } else {
        throw SyntaxError("frame must start with V or A", 1);
    }
    in.expect('(', "'(' after event kind");

    const std::string_view predicate_role = frame.kind == EventKind::kVerb ? "P" : "C";
    std::set<std::string, std::less<>> seen;
    std::vector<std::string> unknown_roles;
    bool has_predicate = false;

    for (;;) {
        const std::size_t role_column = in.column();
        const auto role = in.word();
        if (role.empty()) in.fail("expected slot role");
        in.expect(':', "':' after slot role");
        const auto tok = in.token();

        if (!seen.emplace(role).second) {
            throw DuplicateSlot("slot '" + std::string(role) + "' given twice (column " +
                                std::to_string(role_column) + ")");
        }
        if (role == predicate_role) {
            frame.predicate = std::string(tok);
            has_predicate = true;
        } else if (const auto r = slot_role_from_name(role)) {
            frame.slots.emplace(*r, std::string(tok));
        } else {
            unknown_roles.emplace_back(role);
        }

        in.skip_space();
        const char sep = in.get();
        if (sep == ')') break;
        if (sep != ',') in.fail("expected ',' or ')'");
    }

    for (;;) {
        in.skip_space();
        if (in.at_end()) break;
        const char c = in.get();
        std::optional<EmotionType> tag;
        if (c == '!') {
            tag = EmotionType::kSurprise;
        } else if (c == '+') {
            const auto name = in.word();
            tag = emotion_from_name(name);
            if (!tag || is_appraisal_type(*tag)) in.fail("unknown lexical tag '" + std::string(name) + "'");
        } else {
            in.fail("unexpected trailing input");
        }
        frame.tags.push_back(*tag);
    }
    std::sort(frame.tags.begin(), frame.tags.end());
    frame.tags.erase(std::unique(frame.tags.begin(), frame.tags.end()), frame.tags.end());

    if (!unknown_roles.empty()) {
        throw UnknownSignature("unknown slot role '" + unknown_roles.front() + "' for " + kind_prefix(frame.kind) +
                               " frame");
    }
    if (!has_predicate) {
        throw UnknownSignature(kind_prefix(frame.kind) + " frame requires a " + std::string(predicate_role) +
                               " slot");
    }
    std::vector<SlotRole> roles;
    for (const auto& [role, _] : frame.slots) roles.push_back(role);
    if (!match_signature(frame.kind, roles)) {
        std::string listed;
        for (const auto r : roles) listed += std::string(listed.empty() ? "" : ",") + std::string(slot_role_name(r));
        throw UnknownSignature("no event type matches " + kind_prefix(frame.kind) + "(" + listed + ")");
    }
    return frame;
}

Signature signature_of(const CaseFrame& frame) {
    std::vector<SlotRole> roles;
    roles.reserve(frame.slots.size());
    for (const auto& [role, _] : frame.slots) roles.push_back(role);
    const auto sig = match_signature(frame.kind, roles);
    if (!sig) throw UnknownSignature("frame was not produced by parse_case_frame");
    return *sig;
}

std::string render_case_frame(const CaseFrame& frame) {
    std::string out = kind_prefix(frame.kind) + "(";
    bool first = true;
    for (const auto& [role, tok] : frame.slots) {
        if (!first) out += ", ";
        first = false;
        out += slot_role_name(role);
        out += ':';
        out += tok;
    }
    if (!first) out += ", ";
    out += frame.kind == EventKind::kVerb ? "P:" : "C:";
    out += frame.predicate;
    out += ')';
    for (const auto tag : frame.tags) {
        out += " +";
        out += emotion_name(tag);
    }
    return out;
}

} // namespace affectnav
