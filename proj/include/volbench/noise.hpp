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

#include <cstdint>
#include <map>
#include <string>

namespace volbench {

/**
 * Gate-attached depolarizing noise plus readout bit flips.
 *
 * Depolarizing with strength p replaces the targeted subsystem with the
 * maximally mixed state with probability p.  The trajectory engine unravels
 * this as: with probability p, insert a uniformly random Pauli (identity
 * included) on the target, which reproduces the channel exactly in
 * expectation and makes p = 1 fully mixing.
 *
 * Logical permutations are noiseless; only routing-inserted physical SWAPs
 * pay p_swap.
 */
struct NoiseModel {
    double p1 = 0.0;        ///< per one-qubit operation
    double p2 = 0.0;        ///< per two-qubit SU(4) gate
    double p_swap = 0.0;    ///< per physical SWAP inserted by routing
    double p_readout = 0.0; ///< independent bit flip per measured qubit

    [[nodiscard]] bool all_zero() const {
        return p1 == 0.0 && p2 == 0.0 && p_swap == 0.0 && p_readout == 0.0;
    }

    /// Throws std::invalid_argument unless every field lies in [0, 1].
    void validate() const;
};

/// Measurement record: outcome index -> count.  Outcome indices follow the
/// same big-endian qubit order as amplitude indices.
struct ShotCounts {
    int width = 0;
    std::uint64_t total_shots = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    void add(std::uint64_t outcome, std::uint64_t n = 1);

    /// Merges another record; associative and commutative.
    void merge(const ShotCounts &other);

    /// {"shots": N, "counts": {"bitstring": count}}, qubit 0 leftmost.
    [[nodiscard]] std::string to_json() const;

    static ShotCounts from_json(const std::string &text);
};

} // namespace volbench
