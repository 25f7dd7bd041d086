// Copyright 2026 The Volbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace volbench {

/// Requested simulation exceeds a configured resource cap (state width, etc.).
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Input text is syntactically well-formed but violates the expected schema.
class SchemaError : public std::runtime_error {
  public:
    explicit SchemaError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Parsed data violates a structural invariant (non-unitary matrix, bad
/// permutation, overlapping gate pairs, ...).
class InvariantError : public std::runtime_error {
  public:
    explicit InvariantError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Value falls outside the domain this tool supports.
class UnsupportedError : public std::runtime_error {
  public:
    explicit UnsupportedError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace volbench
