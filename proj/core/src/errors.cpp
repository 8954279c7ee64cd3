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

#include "affectnav/errors.hpp"

#include <utility>

namespace affectnav {

Error::Error(std::string code, const std::string& message)
    : std::runtime_error(message), code_(std::move(code)) {}

SyntaxError::SyntaxError(const std::string& message, std::size_t column)
    : Error("syntax_error", "column " + std::to_string(column) + ": " + message), column_(column) {}

FormatError::FormatError(const std::string& message, std::size_t line)
    : Error("format_error", line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

RowSumError::RowSumError(const std::string& message, std::size_t row)
    : Error("row_sum_error", message), row_(row) {}

} // namespace affectnav
