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

#include <iosfwd>
#include <optional>
#include <string>

#include "affectnav/engine.hpp"

namespace affectnav::cli {

struct ReplOptions {
    std::optional<std::string> persona;
    bool json = false;
};

// Reads utterance lines until EOF or ":quit". Other commands:
//   :state                 current state and affect profile
//   :idle                  drift one step without a stimulus
//   :recommend [lat lon [radius_km]]
// A malformed line prints "error[<code>]: ..." and leaves the session as is.
// Returns the number of lines that failed.
int run_repl(const Engine& engine, std::istream& in, std::ostream& out, const ReplOptions& options);

// Trace evaluation to CSV; returns a process exit code.
int run_eval(const Engine& engine, std::istream& trace, std::ostream& out, std::ostream& err,
             std::optional<std::string> persona = std::nullopt);

// Transition table with row sums; rows drifting more than 0.01 from 1 are
// flagged and make the exit code 1.
int inspect_transition(std::istream& table, std::ostream& out);
int inspect_groups(const GroupTargets& targets, std::ostream& out);
int inspect_spots(std::istream& catalog, std::ostream& out);
int inspect_fv(std::istream& fv, std::ostream& out);

} // namespace affectnav::cli
