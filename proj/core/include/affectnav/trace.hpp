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

// Utterance lines and trace files.
//
// An utterance line is a case frame optionally followed by `|` and
// space-separated context flags:
//
//     V(S:friend, O:exam, P:pass) | affected=other desirability=desirable
//
// Flags: agent=self|other  affected=self|other
//        desirability=desirable|undesirable|na
//        prospect=none|prospective|confirmed|disconfirmed
//        approval=approve|disapprove|na
//
// A trace file holds one step per line ('#' comments and blank lines are
// skipped):
//
//     <utterance line>         run the full pipeline
//     @groups e1 ... e9        apply a group vector directly
//     @idle                    drift without a stimulus
//     @start <state>           set the current mental state
//
// eval writes one CSV row per step except @start, with the frozen header
//
//     turn,kind,state_before,state_after,group,valence,intensity
//
// kind is utterance|groups|idle; group is 0 for drift; for @groups rows
// valence is "none" and intensity is the largest group strength.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affectnav/engine.hpp"

namespace affectnav {

[[nodiscard]] Utterance parse_utterance_line(std::string_view line);
[[nodiscard]] std::string render_utterance_line(const Utterance& u);

struct TraceStep {
    enum class Kind { kUtterance, kGroups, kIdle, kStart };

    Kind kind = Kind::kUtterance;
    Utterance utterance;
    GroupVector groups;
    MentalState start = MentalState::kQuiet;
    std::size_t line = 0;
};

// Throws FormatError with the offending line number.
[[nodiscard]] std::vector<TraceStep> parse_trace(std::istream& in);

struct TraceRow {
    std::size_t turn = 0;
    std::string kind;
    MentalState state_before = MentalState::kQuiet;
    MentalState state_after = MentalState::kQuiet;
    int group = 0;
    Valence valence = Valence::kNone;
    double intensity = 0.0;
};

inline constexpr std::string_view kTraceCsvHeader = "turn,kind,state_before,state_after,group,valence,intensity";

// Runs steps against session in order. Pipeline errors are rethrown as
// FormatError carrying the step's line number.
[[nodiscard]] std::vector<TraceRow> run_trace(const Engine& engine, SessionState& session,
                                              std::span<const TraceStep> steps);

void write_trace_csv(std::span<const TraceRow> rows, std::ostream& out);

} // namespace affectnav
