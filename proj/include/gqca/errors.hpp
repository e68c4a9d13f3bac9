// Copyright 2026 The gqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gqca {

/// Base class for all domain errors raised by the simulator. CLI maps these
/// to exit code 1; usage errors are reported separately as exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string &msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string &msg) : Error(msg) {}
};

/// A rule gate that does not map basis states to basis states (up to phase)
/// was handed to the classical fast path.
struct NonClassicalGate : Error {
    explicit NonClassicalGate(const std::string &msg) : Error(msg) {}
};

/// Decoding failed; `cell` is the first offending cell index.
struct MalformedCode : Error {
    size_t cell;
    MalformedCode(size_t cell_index, const std::string &msg)
        : Error(msg + " (cell " + std::to_string(cell_index) + ")"), cell(cell_index) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string &msg) : Error(msg) {}
};

/// Requested gate is not present in the golden sequence library.
struct MissingLibraryEntry : Error {
    explicit MissingLibraryEntry(const std::string &msg) : Error(msg) {}
};

/// A predicate program whose pulse count breaks the sub-linear time budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string &msg) : Error(msg) {}
};

}  // namespace gqca
