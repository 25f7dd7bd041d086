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
 * Heavy-output statistics: an outcome is heavy when its ideal probability
 * strictly exceeds the median of the ideal distribution, and a test passes
 * when the pooled measured heavy-output probability clears 2/3 with a
 * two-sigma margin.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "volbench/noise.hpp"

namespace volbench {

/// The pass threshold for heavy-output probability.
inline constexpr double kHeavyThreshold = 2.0 / 3.0;

struct HeavySet {
    int width = 0;
    double median = 0.0;          ///< midpoint of the two central order statistics
    std::vector<std::uint64_t> members; ///< sorted outcome indices with prob > median
    double ideal_heavy_mass = 0.0;      ///< sum of ideal probabilities over members

    [[nodiscard]] bool contains(std::uint64_t outcome) const;
};

/// Computes the heavy set of an ideal distribution (length must be a power
/// of two summing to 1 within 1e-9).
HeavySet heavy_set(const std::vector<double> &ideal_probs);

/// Fraction of shots that landed in the heavy set.
double hop_estimate(const ShotCounts &counts, const HeavySet &hs);

struct HeavyOutputResult {
    std::vector<double> per_circuit_hop;
    double pooled_hop = 0.0;
    double ci_low = 0.0; ///< pooled - 2 sigma, clamped at 0; 0 when degenerate
    double threshold = kHeavyThreshold;
    bool passed = false;
    bool degenerate = false; ///< CI undefined (pooled in {0,1} on too few samples)
};

/// Pools per-circuit HOPs: pooled = mean, ci_low = pooled -
/// 2 sqrt(pooled (1-pooled) / (nc ns)), passed iff ci_low > 2/3.  A pooled
/// HOP of exactly 0 or 1 with nc*ns < 10 has no usable CI and fails safe.
/// Requires at least two circuits.
HeavyOutputResult evaluate_pass(const std::vector<double> &per_circuit_hops,
                                std::uint64_t shots_per_circuit);

} // namespace volbench
