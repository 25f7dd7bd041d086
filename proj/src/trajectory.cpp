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

#include "volbench/trajectory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "volbench/errors.hpp"
#include "volbench/kernels.hpp"

namespace volbench {

namespace {

constexpr double kNormTolerance = 1e-9;

// shot-local sub-streams
constexpr std::uint64_t kNoiseStream = 0;
constexpr std::uint64_t kMeasStream = 1;

int bit_of(int qubit, int width) { return width - 1 - qubit; }

struct PreparedProgram {
    const SimProgram *program;
    std::vector<std::vector<int>> perm_bit_maps; // aligned with program->ops
};

PreparedProgram prepare(const SimProgram &program) {
    PreparedProgram prepared;
    prepared.program = &program;
    prepared.perm_bit_maps.resize(program.ops.size());
    const int n = program.width;
    for (std::size_t i = 0; i < program.ops.size(); ++i) {
        const SimOp &op = program.ops[i];
        if (op.kind != SimOp::Kind::Permutation) {
            continue;
        }
        std::vector<int> bit_map(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            bit_map[bit_of(q, n)] = bit_of(op.permutation[q], n);
        }
        prepared.perm_bit_maps[i] = std::move(bit_map);
    }
    return prepared;
}

// One trajectory through the op stream.  noise_rng is consumed strictly in
// op order: one uniform per gate, plus one bounded draw when noise fires.
void evolve(const PreparedProgram &prepared, const NoiseModel &noise, Rng &noise_rng,
            std::vector<Complex> &amps, std::vector<Complex> &scratch) {
    const SimProgram &program = *prepared.program;
    const int n = program.width;
    const std::size_t size = amps.size();

    auto maybe_depolarize = [&](double p, int a, int b) {
        if (noise_rng.uniform() < p) {
            const std::uint64_t pauli_pair = noise_rng.uniform_int(16);
            const int pauli_a = static_cast<int>(pauli_pair >> 2);
            const int pauli_b = static_cast<int>(pauli_pair & 3);
            if (pauli_a != 0) {
                kernels::apply_pauli(amps.data(), size, bit_of(a, n), pauli_a);
            }
            if (pauli_b != 0) {
                kernels::apply_pauli(amps.data(), size, bit_of(b, n), pauli_b);
            }
        }
    };

    for (std::size_t i = 0; i < program.ops.size(); ++i) {
        const SimOp &op = program.ops[i];
        switch (op.kind) {
        case SimOp::Kind::Permutation:
            kernels::permute_bits(amps.data(), scratch.data(), size,
                                  prepared.perm_bit_maps[i].data(), n);
            amps.swap(scratch);
            break;
        case SimOp::Kind::Su4Gate:
            kernels::apply_two_qubit_gate(amps.data(), size, bit_of(op.a, n), bit_of(op.b, n),
                                          op.matrix);
            maybe_depolarize(noise.p2, op.a, op.b);
            break;
        case SimOp::Kind::SwapGate:
            kernels::apply_two_qubit_gate(amps.data(), size, bit_of(op.a, n), bit_of(op.b, n),
                                          op.matrix);
            maybe_depolarize(noise.p_swap, op.a, op.b);
            break;
        case SimOp::Kind::LayerEnd:
            break;
        }
    }
}

std::vector<double> cumulative_distribution(const std::vector<Complex> &amps) {
    std::vector<double> cdf(amps.size());
    double total = 0.0;
    for (std::size_t x = 0; x < amps.size(); ++x) {
        total += std::norm(amps[x]);
        cdf[x] = total;
    }
    return cdf;
}

// Draws the outcome, applies readout flips per physical qubit, and maps the
// result back to logical bit order.  Consumes exactly 1 + width uniforms.
std::uint64_t measure(const std::vector<double> &cdf, const SimProgram &program,
                      double p_readout, Rng &meas_rng) {
    const double total = cdf.back();
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw InvariantError("trajectory norm drifted to " + std::to_string(total));
    }
    const double u = meas_rng.uniform() * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    auto outcome = static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
    outcome = std::min<std::uint64_t>(outcome, cdf.size() - 1);

    const int n = program.width;
    for (int q = 0; q < n; ++q) {
        if (meas_rng.uniform() < p_readout) {
            outcome ^= 1ULL << (n - 1 - q);
        }
    }
    return relabel_outcome(outcome, program.output_relabel, n);
}

} // namespace

ShotCounts sample_noisy_trajectory(const SimProgram &program, const NoiseModel &noise,
                                   std::uint64_t shots, const SeedSpec &seed,
                                   const TrajectoryOptions &opts) {
    noise.validate();
    if (shots < 1) {
        throw std::invalid_argument("sample_noisy_trajectory: shots must be >= 1");
    }
    if (program.width < 1 || program.width > opts.sim.width_cap) {
        throw CapacityError("trajectory width " + std::to_string(program.width) +
                            " exceeds cap " + std::to_string(opts.sim.width_cap));
    }

    const PreparedProgram prepared = prepare(program);
    const std::size_t size = std::size_t{1} << program.width;
    const bool state_noise_free = noise.p1 == 0.0 && noise.p2 == 0.0 && noise.p_swap == 0.0;
    const auto shot_count = static_cast<std::int64_t>(shots);
    std::vector<std::uint64_t> outcomes(shots);

    std::atomic<bool> failed{false};
    std::string failure;
    auto record_failure = [&](const std::exception &e) {
#pragma omp critical(volbench_trajectory_error)
        {
            if (!failed.exchange(true)) {
                failure = e.what();
            }
        }
    };

    if (state_noise_free && !opts.force_per_shot) {
        // No noise can alter the state, so evolve once; each shot still
        // draws from its own measurement stream exactly as the per-shot
        // path would.
        std::vector<Complex> amps(size, Complex(0.0, 0.0));
        std::vector<Complex> scratch(size);
        amps[0] = 1.0;
        Rng unused_noise_rng(0);
        evolve(prepared, noise, unused_noise_rng, amps, scratch);
        const std::vector<double> cdf = cumulative_distribution(amps);

#pragma omp parallel for schedule(static)
        for (std::int64_t s = 0; s < shot_count; ++s) {
            if (failed) {
                continue;
            }
            try {
                Rng meas_rng(seed.child(static_cast<std::uint64_t>(s)).child(kMeasStream));
                outcomes[static_cast<std::size_t>(s)] =
                    measure(cdf, program, noise.p_readout, meas_rng);
            } catch (const std::exception &e) {
                record_failure(e);
            }
        }
    } else {
#pragma omp parallel
        {
            std::vector<Complex> amps(size);
            std::vector<Complex> scratch(size);

#pragma omp for schedule(static)
            for (std::int64_t s = 0; s < shot_count; ++s) {
                if (failed) {
                    continue;
                }
                try {
                    const SeedSpec shot_seed = seed.child(static_cast<std::uint64_t>(s));
                    Rng noise_rng(shot_seed.child(kNoiseStream));
                    Rng meas_rng(shot_seed.child(kMeasStream));

                    std::fill(amps.begin(), amps.end(), Complex(0.0, 0.0));
                    amps[0] = 1.0;
                    evolve(prepared, noise, noise_rng, amps, scratch);
                    const std::vector<double> cdf = cumulative_distribution(amps);
                    outcomes[static_cast<std::size_t>(s)] =
                        measure(cdf, program, noise.p_readout, meas_rng);
                } catch (const std::exception &e) {
                    record_failure(e);
                }
            }
        }
    }

    if (failed) {
        throw InvariantError(failure);
    }

    ShotCounts counts;
    counts.width = program.width;
    for (std::uint64_t outcome : outcomes) {
        counts.add(outcome);
    }
    return counts;
}

ShotCounts sample_noisy_trajectory(const Circuit &circuit, const NoiseModel &noise,
                                   std::uint64_t shots, const SeedSpec &seed,
                                   const TrajectoryOptions &opts) {
    return sample_noisy_trajectory(compile_program(circuit), noise, shots, seed, opts);
}

} // namespace volbench
