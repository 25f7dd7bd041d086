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

#include "volbench/volumetric.hpp"

#include <omp.h>

#include <atomic>
#include <stdexcept>

#include "volbench/errors.hpp"
#include "volbench/topology.hpp"
#include "volbench/trajectory.hpp"

namespace volbench {

namespace {

// per-width sub-streams: circuit generation vs sampling
constexpr std::uint64_t kGenStream = 0;
constexpr std::uint64_t kSampleStream = 1;

} // namespace

int default_n_max(int k) {
    switch (k) {
    case 1:
    case 2:
        return 8;
    case 3:
        return 6;
    case 4:
    case 5:
        return 5;
    default:
        throw std::domain_error("volumetric class must lie in [1, 5]");
    }
}

std::pair<int, long long> shape(int k, int n) {
    if (k < kMinClass || k > kMaxClass) {
        throw std::domain_error("volumetric class must lie in [1, 5]");
    }
    if (n < 2) {
        throw std::domain_error("width must be >= 2");
    }
    long long depth = 1;
    for (int i = 0; i < k; ++i) {
        if (depth > (1LL << 56) / n) {
            throw std::overflow_error("depth n^k overflows");
        }
        depth *= n;
    }
    return {n, depth};
}

std::uint64_t qv1_to_quantum_volume(int score) {
    if (score < 0) {
        throw std::domain_error("score must be >= 0");
    }
    if (score > 62) {
        throw std::overflow_error("2^score exceeds the 64-bit range");
    }
    return std::uint64_t{1} << score;
}

WidthResult run_width_test(int k, int n, const NoiseModel &noise, const ProtocolConfig &config,
                           const SeedSpec &seed) {
    noise.validate();
    if (config.circuits < 2) {
        throw std::invalid_argument("width test needs at least two circuits");
    }
    const auto [width, depth] = shape(k, n);
    const Topology topology = parse_topology(config.topology, width);
    const bool routed = topology.kind != TopologyKind::AllToAll;

    const SeedSpec width_seed = seed.child(static_cast<std::uint64_t>(k))
                                    .child(static_cast<std::uint64_t>(n));

    std::vector<double> hops(static_cast<std::size_t>(config.circuits), 0.0);
    std::vector<long long> physical_depths(static_cast<std::size_t>(config.circuits), depth);

    std::atomic<bool> failed{false};
    std::string failure;

    const int requested_jobs = config.jobs;
#pragma omp parallel for schedule(dynamic) if (requested_jobs != 1) \
    num_threads(requested_jobs > 0 ? requested_jobs : omp_get_max_threads())
    for (int c = 0; c < config.circuits; ++c) {
        if (failed) {
            continue;
        }
        try {
            const auto ci = static_cast<std::uint64_t>(c);
            const Circuit circuit = build_model_circuit(
                width, depth, width_seed.child(kGenStream).child(ci), config.pairing);
            const std::vector<double> ideal = ideal_probabilities(circuit, config.sim);
            const HeavySet hs = heavy_set(ideal);

            TrajectoryOptions traj;
            traj.sim = config.sim;
            const SeedSpec sample_seed = width_seed.child(kSampleStream).child(ci);
            ShotCounts counts;
            if (routed) {
                const RoutedCircuit routed_circuit = route_circuit(circuit, topology);
                physical_depths[static_cast<std::size_t>(c)] = routed_circuit.physical_depth();
                counts = sample_noisy_trajectory(compile_program(routed_circuit), noise,
                                                 config.shots, sample_seed, traj);
            } else {
                counts =
                    sample_noisy_trajectory(circuit, noise, config.shots, sample_seed, traj);
            }
            hops[static_cast<std::size_t>(c)] = hop_estimate(counts, hs);
        } catch (const std::exception &e) {
#pragma omp critical(volbench_width_test_error)
            {
                if (!failed.exchange(true)) {
                    failure = e.what();
                }
            }
        }
    }

    if (failed) {
        // capacity errors must keep their type across the parallel region
        if (failure.find("exceeds cap") != std::string::npos) {
            throw CapacityError(failure);
        }
        throw std::runtime_error(failure);
    }

    WidthResult result;
    result.n = width;
    result.depth = depth;
    result.heavy = evaluate_pass(hops, config.shots);

    long long max_depth = 0;
    double sum_depth = 0.0;
    for (long long pd : physical_depths) {
        max_depth = std::max(max_depth, pd);
        sum_depth += static_cast<double>(pd);
    }
    result.routed_depth = max_depth;
    result.routed_depth_mean = sum_depth / static_cast<double>(config.circuits);
    return result;
}

VolumetricScore compute_score(int k, const NoiseModel &noise, const ProtocolConfig &config,
                              int n_max, const SeedSpec &seed) {
    if (n_max < 2) {
        throw std::domain_error("n_max must be >= 2");
    }
    VolumetricScore score;
    score.k = k;
    score.score = 0;
    for (int n = 2; n <= n_max; ++n) {
        WidthResult result = run_width_test(k, n, noise, config, seed);
        const bool passed = result.heavy.passed;
        score.widths.push_back(std::move(result));
        if (!passed) {
            break;
        }
        score.score = n;
    }
    return score;
}

} // namespace volbench
