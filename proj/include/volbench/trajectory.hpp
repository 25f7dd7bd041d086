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
 * Stochastic Pauli-trajectory sampling.
 *
 * Each shot evolves a pure state through the op stream; every gate carries a
 * depolarizing opportunity (probability p of a uniformly random Pauli on the
 * pair, identity included), the final distribution is sampled once, and each
 * output bit flips with p_readout.
 *
 * Every shot consumes two private random streams derived from its index
 * (one for noise events, one for measurement), so shots can run in any
 * order or thread count with bit-identical results.  When no state-affecting
 * noise is configured the state is evolved once and shots only draw from
 * their measurement streams, which produces exactly the same outcomes as the
 * per-shot path.
 */

#pragma once

#include "volbench/noise.hpp"
#include "volbench/seed_stream.hpp"
#include "volbench/sim_program.hpp"
#include "volbench/statevector.hpp"

namespace volbench {

struct TrajectoryOptions {
    SimOptions sim;
    /// Disables the evolve-once shortcut for noiseless runs; used by tests
    /// to prove the shortcut changes nothing.
    bool force_per_shot = false;
};

ShotCounts sample_noisy_trajectory(const SimProgram &program, const NoiseModel &noise,
                                   std::uint64_t shots, const SeedSpec &seed,
                                   const TrajectoryOptions &opts = {});

/// Convenience overload for logical circuits (permutations noiseless).
ShotCounts sample_noisy_trajectory(const Circuit &circuit, const NoiseModel &noise,
                                   std::uint64_t shots, const SeedSpec &seed,
                                   const TrajectoryOptions &opts = {});

} // namespace volbench
