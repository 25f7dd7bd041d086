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
 * Amplitude-array kernels.
 *
 * Two implementations share each signature: the OpenMP-parallel kernels used
 * by the engines, and a plain serial reference in kernels::reference used by
 * the tests and the benchmark as ground truth.  Both are bit-identical for
 * any thread count: every output element depends only on input elements.
 *
 * Kernels address raw BIT positions of the amplitude index (bit 0 = least
 * significant).  The qubit-to-bit mapping (qubit q -> bit n-1-q) lives in the
 * engine wrappers, not here.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>

namespace volbench::kernels {

using Complex = std::complex<double>;

/// Row-major 4x4 gate matrix as consumed by the kernels.
using GateMatrix = std::array<Complex, 16>;

/// Group count below which the parallel kernels run single-threaded; small
/// states are slower to fork than to sweep.
inline constexpr std::int64_t kParallelGrain = 1 << 12;

/// Applies a 4x4 matrix to the subspace of bits (bit_hi2, bit_lo2), where
/// bit_hi2 carries the high bit of the 2-bit gate index.  In-place.
void apply_two_qubit_gate(Complex *amps, std::size_t num_amps, int bit_hi2, int bit_lo2,
                          const GateMatrix &u);

/// Applies Pauli X (1), Y (2) or Z (3) at one bit position.  In-place.
void apply_pauli(Complex *amps, std::size_t num_amps, int bit, int pauli);

/// Moves amplitude src[x] to dst[y] where bit i of x lands at bit
/// bit_map[i] of y.  bit_map must be a bijection on [0, nbits).
void permute_bits(const Complex *src, Complex *dst, std::size_t num_amps, const int *bit_map,
                  int nbits);

/// probs[x] = |amps[x]|^2.
void probabilities(const Complex *amps, std::size_t num_amps, double *probs);

/// Sum of |amps[x]|^2.  Serial on purpose: a fixed summation order keeps the
/// value identical across thread counts.
double norm_squared(const Complex *amps, std::size_t num_amps);

namespace reference {

// Straight-line serial versions; the naive formulation is the oracle.

void apply_two_qubit_gate(Complex *amps, std::size_t num_amps, int bit_hi2, int bit_lo2,
                          const GateMatrix &u);
void apply_pauli(Complex *amps, std::size_t num_amps, int bit, int pauli);
void permute_bits(const Complex *src, Complex *dst, std::size_t num_amps, const int *bit_map,
                  int nbits);
void probabilities(const Complex *amps, std::size_t num_amps, double *probs);

} // namespace reference

} // namespace volbench::kernels
