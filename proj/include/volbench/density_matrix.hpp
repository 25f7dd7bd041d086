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
 * Exact density-matrix evolution for small widths.
 *
 * This is the oracle against which the trajectory engine is cross-validated,
 * so it deliberately shares no state-evolution code with the kernels: plain
 * nested loops, channels applied in closed form.
 */

#pragma once

#include <vector>

#include "volbench/circuit.hpp"
#include "volbench/noise.hpp"
#include "volbench/sim_program.hpp"
#include "volbench/statevector.hpp"

namespace volbench {

struct DensityMatrix {
    int width = 0;
    std::vector<Complex> entries; // row-major, entries[r * dim + c] = <r|rho|c>

    [[nodiscard]] std::size_t dim() const { return std::size_t{1} << width; }
    [[nodiscard]] Complex trace() const;
};

/// |0...0><0...0|.  Throws CapacityError beyond opts.density_width_cap.
DensityMatrix dm_zero_state(int width, const SimOptions &opts = {});

/// rho -> U rho U' on the qubit pair (pair.first carries the high basis bit).
void dm_apply_gate(DensityMatrix &rho, const Unitary4 &u, std::pair<int, int> pair);

/// Relabels both indices by the qubit permutation.
void dm_apply_permutation(DensityMatrix &rho, const std::vector<int> &perm);

/// Depolarizing on a qubit pair: rho -> (1-p) rho + p (Tr_pair rho) x I/4.
void dm_depolarize_pair(DensityMatrix &rho, std::pair<int, int> pair, double p);

/// Single-qubit analogue: rho -> (1-p) rho + p (Tr_q rho) x I/2.
void dm_depolarize_single(DensityMatrix &rho, int qubit, double p);

/// max |rho - rho'| entry.
double dm_hermiticity_defect(const DensityMatrix &rho);

/// Smallest eigenvalue (for positive-semidefiniteness checks).
double dm_min_eigenvalue(const DensityMatrix &rho);

/// Real diagonal as an outcome distribution.
std::vector<double> dm_diagonal(const DensityMatrix &rho);

/// Convolves a distribution with independent per-qubit readout flips.
std::vector<double> apply_readout_flips(std::vector<double> probs, int width, double p_readout);

/// Exact output distribution under the same channel placement the trajectory
/// engine uses.  Throws CapacityError when width exceeds the density cap.
std::vector<double> noisy_distribution_exact(const SimProgram &program, const NoiseModel &noise,
                                             const SimOptions &opts = {});

std::vector<double> noisy_distribution_exact(const Circuit &circuit, const NoiseModel &noise,
                                             const SimOptions &opts = {});

} // namespace volbench
