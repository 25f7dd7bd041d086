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
 * A circuit flattened into the op stream both noisy engines consume.  The op
 * stream fixes the order of noise opportunities, so the trajectory sampler
 * and the density-matrix oracle see identical channel placements while
 * evolving state their own way.
 */

#pragma once

#include <vector>

#include "volbench/circuit.hpp"
#include "volbench/kernels.hpp"
#include "volbench/topology.hpp"

namespace volbench {

struct SimOp {
    enum class Kind {
        Permutation, ///< noiseless logical permutation
        Su4Gate,     ///< two-qubit gate; depolarizing opportunity at p2
        SwapGate,    ///< routing SWAP; depolarizing opportunity at p_swap
        LayerEnd,    ///< marks a logical layer boundary (invariant checks)
    };

    Kind kind;
    int a = -1; ///< first qubit position (Su4Gate/SwapGate)
    int b = -1;
    kernels::GateMatrix matrix{};  ///< Su4Gate/SwapGate
    std::vector<int> permutation;  ///< Permutation
};

struct SimProgram {
    int width = 0;
    std::vector<SimOp> ops;
    /// logical qubit q is measured at physical position output_relabel[q]
    std::vector<int> output_relabel;
};

SimProgram compile_program(const Circuit &circuit);
SimProgram compile_program(const RoutedCircuit &routed);

kernels::GateMatrix swap_gate_matrix();

} // namespace volbench
