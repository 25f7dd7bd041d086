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

/**
 * @file
 * Logical circuit intermediate representation.
 *
 * A circuit of width n is an ordered list of layers.  Each layer first
 * permutes the qubits, then applies floor(n/2) two-qubit SU(4) gates on
 * disjoint post-permutation positions (for odd n one position stays idle).
 * Permutations are stored explicitly; whether they are realized by swap
 * networks or by relabeling is a routing decision, not an IR property.
 *
 * Conventions used throughout the project:
 *  - perm[i] is the post-permutation position of the qubit at position i.
 *  - Basis-state index x encodes qubit q in bit (n-1-q), i.e. the n-digit
 *    binary rendering of x reads qubit 0 first (big-endian qubit order).
 *  - A gate on pair (a, b) uses the 4x4 basis |q_a q_b> = |00>,|01>,|10>,|11>.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace volbench {

using Complex = std::complex<double>;

/// Two-qubit gate matrix.  Valid instances are special unitary:
/// max|U'U - I| <= kUnitaryTolerance and |det(U) - 1| <= kUnitaryTolerance.
using Unitary4 = Eigen::Matrix4cd;

/// About 100x the rounding accumulated by 4x4 double products; rejects real
/// corruption while accepting numerical noise.
inline constexpr double kUnitaryTolerance = 1e-10;

/// Max |entry| of U'U - I.
double unitarity_defect(const Unitary4 &u);

/// |det(U) - 1|.
double special_defect(const Unitary4 &u);

bool is_special_unitary(const Unitary4 &u, double tol = kUnitaryTolerance);

struct Gate {
    std::pair<int, int> qubits; // post-permutation positions, distinct
    Unitary4 u;
};

struct Layer {
    std::vector<int> permutation; // bijection on [0, width)
    std::vector<Gate> gates;      // disjoint pairs, exactly floor(width/2)
};

struct Circuit {
    int width = 0;
    std::vector<Layer> layers;

    [[nodiscard]] int depth() const { return static_cast<int>(layers.size()); }
};

/// One invariant violation found by validate().  layer < 0 flags a
/// circuit-level problem.
struct Violation {
    int layer;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] std::string to_string() const;
};

/// Checks every type invariant; violations are data, not failures.
ValidationReport validate(const Circuit &circuit);

bool is_permutation(const std::vector<int> &perm);

/// Canonical JSON form; deserialize(serialize(c)) == c bit-exactly.
std::string serialize(const Circuit &circuit);

/// Throws SchemaError on malformed/mis-shaped input and InvariantError when
/// the decoded circuit fails validate().
Circuit deserialize(const std::string &text);

bool circuits_equal(const Circuit &a, const Circuit &b);

/// n-digit binary string of x, qubit 0 leftmost.
std::string to_bitstring(std::uint64_t x, int width);

/// Inverse of to_bitstring; throws SchemaError on bad input.
std::uint64_t from_bitstring(const std::string &s, int width);

} // namespace volbench
