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
 * Pure-state simulation: exact ideal output distributions for logical
 * circuits.  Amplitude index x encodes qubit q in bit (width-1-q), so the
 * array index equals the outcome bitstring read as a binary number.
 */

#pragma once

#include <vector>

#include "volbench/circuit.hpp"

namespace volbench {

struct SimOptions {
    int width_cap = 20;          ///< refuse state vectors beyond 2^width_cap amplitudes
    int density_width_cap = 6;   ///< refuse density matrices beyond 4^cap entries
    bool check_invariants = true; ///< assert norm/trace conservation per layer
};

struct StateVector {
    int width = 0;
    std::vector<Complex> amps; // size 2^width

    [[nodiscard]] std::size_t size() const { return amps.size(); }
};

/// |0...0> on `width` qubits.  Throws CapacityError beyond the cap.
StateVector zero_state(int width, const SimOptions &opts = {});

/// Applies a two-qubit gate at qubit positions (pair.first, pair.second);
/// pair.first holds the high bit of the 4x4 basis index.  Throws
/// std::out_of_range for bad indices.
void apply_gate(StateVector &state, const Unitary4 &u, std::pair<int, int> pair);

/// Moves the qubit at position i to position perm[i] for every i.
void apply_permutation(StateVector &state, const std::vector<int> &perm);

/// Applies one full layer: permutation first, then the layer's gates on
/// post-permutation positions.
void apply_layer(StateVector &state, const Layer &layer);

/// Squared-magnitude distribution of the current amplitudes.
std::vector<double> born_probabilities(const StateVector &state);

double norm_squared(const StateVector &state);

/// Exact Born-rule output distribution of the circuit from |0...0>.
/// Throws CapacityError when the width exceeds opts.width_cap.
std::vector<double> ideal_probabilities(const Circuit &circuit, const SimOptions &opts = {});

} // namespace volbench
