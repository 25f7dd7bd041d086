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
 * The volumetric protocol: class QV-k tests circuits of shape n x n^k at
 * ascending widths and scores the largest width whose entire prefix from
 * n = 2 passed the heavy-output criterion.
 */

#pragma once

#include <string>
#include <vector>

#include "volbench/heavy_output.hpp"
#include "volbench/noise.hpp"
#include "volbench/random_circuit.hpp"
#include "volbench/seed_stream.hpp"
#include "volbench/statevector.hpp"

namespace volbench {

inline constexpr int kMinClass = 1;
inline constexpr int kMaxClass = 5;

/// Default largest width per class, sized so depth n^k stays desk-scale.
int default_n_max(int k);

/// (width, depth) = (n, n^k).  Throws std::domain_error for k outside [1,5]
/// or n < 2.
std::pair<int, long long> shape(int k, int n);

/// 2^score; the class-1 score is the log2 of the original volume metric.
/// Throws std::overflow_error for score > 62.
std::uint64_t qv1_to_quantum_volume(int score);

struct ProtocolConfig {
    int circuits = 100;            ///< model circuits per width test
    std::uint64_t shots = 1000;    ///< measurement shots per circuit
    Pairing pairing = Pairing::Adjacent;
    std::string topology = "all2all";
    SimOptions sim;
    int jobs = 0; ///< 0 = library default thread count
};

struct WidthResult {
    int n = 0;
    long long depth = 0;          ///< n^k logical layers
    HeavyOutputResult heavy;
    long long routed_depth = 0;   ///< max physical layers over the circuits
    double routed_depth_mean = 0.0;
};

struct VolumetricScore {
    int k = 0;
    int score = 0; ///< largest n with the full prefix 2..n passing; 0 if n=2 fails
    std::vector<WidthResult> widths;
    std::string config_digest;
};

/// Runs one width test: generates `circuits` model circuits of shape(k, n),
/// computes ideal heavy sets, samples noisily, and pools the HOPs.
/// Deterministic per seed for any thread count.
WidthResult run_width_test(int k, int n, const NoiseModel &noise, const ProtocolConfig &config,
                           const SeedSpec &seed);

/// Ascends widths n = 2, 3, ... and stops at the first failure or n_max.
VolumetricScore compute_score(int k, const NoiseModel &noise, const ProtocolConfig &config,
                              int n_max, const SeedSpec &seed);

} // namespace volbench
