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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affectnav {

// Base for every recoverable failure in the library. code() is a stable,
// machine-readable identifier surfaced by the service and the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message);

    [[nodiscard]] const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t column);
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

class UnknownSignature : public Error {
public:
    explicit UnknownSignature(const std::string& message) : Error("unknown_signature", message) {}
};

class DuplicateSlot : public Error {
public:
    explicit DuplicateSlot(const std::string& message) : Error("duplicate_slot", message) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& message) : Error("range_error", message) {}
};

// Line numbers are 1-based; 0 means "not tied to a line".
class FormatError : public Error {
public:
    FormatError(const std::string& message, std::size_t line);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ContextError : public Error {
public:
    explicit ContextError(const std::string& message) : Error("context_error", message) {}
};

class RowSumError : public Error {
public:
    RowSumError(const std::string& message, std::size_t row);
    [[nodiscard]] std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class NoStimulus : public Error {
public:
    explicit NoStimulus(const std::string& message) : Error("no_stimulus", message) {}
};

class EmptyCatalog : public Error {
public:
    explicit EmptyCatalog(const std::string& message) : Error("empty_catalog", message) {}
};

class UnknownSession : public Error {
public:
    explicit UnknownSession(const std::string& id) : Error("unknown_session", "no session with id '" + id + "'") {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message) : Error("config_error", message) {}
};

} // namespace affectnav
