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

#include "volbench/heavy_output.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace volbench {

bool HeavySet::contains(std::uint64_t outcome) const {
    return std::binary_search(members.begin(), members.end(), outcome);
}

HeavySet heavy_set(const std::vector<double> &ideal_probs) {
    const std::size_t size = ideal_probs.size();
    if (size < 2 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("heavy_set: distribution length must be a power of two >= 2");
    }
    const double total = std::accumulate(ideal_probs.begin(), ideal_probs.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("heavy_set: probabilities sum to " + std::to_string(total));
    }

    HeavySet hs;
    hs.width = static_cast<int>(std::countr_zero(size));

    // 2^n values: the median is the mean of the two central order statistics
    std::vector<double> sorted = ideal_probs;
    const std::size_t upper = size / 2;
    std::nth_element(sorted.begin(), sorted.begin() + upper, sorted.end());
    const double hi = sorted[upper];
    const double lo = *std::max_element(sorted.begin(), sorted.begin() + upper);
    hs.median = 0.5 * (lo + hi);

    for (std::uint64_t x = 0; x < size; ++x) {
        if (ideal_probs[x] > hs.median) {
            hs.members.push_back(x);
            hs.ideal_heavy_mass += ideal_probs[x];
        }
    }
    return hs;
}

double hop_estimate(const ShotCounts &counts, const HeavySet &hs) {
    if (counts.total_shots < 1) {
        throw std::invalid_argument("hop_estimate: no shots recorded");
    }
    std::uint64_t heavy = 0;
    for (const auto &[outcome, n] : counts.counts) {
        if (hs.contains(outcome)) {
            heavy += n;
        }
    }
    return static_cast<double>(heavy) / static_cast<double>(counts.total_shots);
}

HeavyOutputResult evaluate_pass(const std::vector<double> &per_circuit_hops,
                                std::uint64_t shots_per_circuit) {
    if (per_circuit_hops.size() < 2) {
        throw std::invalid_argument("evaluate_pass: need at least two circuits");
    }
    if (shots_per_circuit < 1) {
        throw std::invalid_argument("evaluate_pass: shots_per_circuit must be >= 1");
    }

    HeavyOutputResult result;
    result.per_circuit_hop = per_circuit_hops;
    result.pooled_hop =
        std::accumulate(per_circuit_hops.begin(), per_circuit_hops.end(), 0.0) /
        static_cast<double>(per_circuit_hops.size());

    const double samples =
        static_cast<double>(per_circuit_hops.size()) * static_cast<double>(shots_per_circuit);
    if ((result.pooled_hop == 0.0 || result.pooled_hop == 1.0) && samples < 10.0) {
        // no usable confidence interval; a benchmark must not pass on one
        result.degenerate = true;
        result.ci_low = 0.0;
        result.passed = false;
        return result;
    }

    const double sigma = std::sqrt(result.pooled_hop * (1.0 - result.pooled_hop) / samples);
    result.ci_low = std::max(0.0, result.pooled_hop - 2.0 * sigma);
    result.passed = result.ci_low > result.threshold;
    return result;
}

} // namespace volbench
