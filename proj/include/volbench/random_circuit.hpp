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
 * Seed-driven generation of model test circuits: uniformly random qubit
 * permutations and Haar-random SU(4) gates arranged into n x d layers.
 */

#pragma once

#include "volbench/circuit.hpp"
#include "volbench/seed_stream.hpp"

namespace volbench {

/// How post-permutation positions are paired for the layer's gates.
enum class Pairing {
    Adjacent,       ///< (0,1), (2,3), ...; the drawn permutation randomizes partners
    RandomDisjoint, ///< a fresh uniformly random perfect matching per layer
};

/// Haar-random element of SU(4): QR of a complex Ginibre matrix with the
/// R-diagonal phase correction, then a global phase fix for det = 1.
Unitary4 haar_su4(const SeedSpec &seed);

/// Uniform over all n! permutations (Fisher-Yates).
std::vector<int> random_permutation(int n, const SeedSpec &seed);

/// Model circuit of shape n x d.  Child streams are derived per layer and per
/// gate, so generation is order-independent.  Throws std::invalid_argument
/// for n < 2 or d < 1.
Circuit build_model_circuit(int n, long long d, const SeedSpec &seed,
                            Pairing pairing = Pairing::Adjacent);

} // namespace volbench
