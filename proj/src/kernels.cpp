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

#include "volbench/kernels.hpp"

#include <algorithm>
#include <vector>

namespace volbench::kernels {

void apply_two_qubit_gate(Complex *amps, std::size_t num_amps, int bit_hi2, int bit_lo2,
                          const GateMatrix &u) {
    const int lo = std::min(bit_hi2, bit_lo2);
    const int hi = std::max(bit_hi2, bit_lo2);
    const std::uint64_t mask_hi2 = 1ULL << bit_hi2;
    const std::uint64_t mask_lo2 = 1ULL << bit_lo2;
    const std::uint64_t lo_mask = (1ULL << lo) - 1;
    const std::uint64_t mid_mask = ((1ULL << (hi - 1)) - 1) ^ lo_mask;
    const std::uint64_t hi_mask = ~((1ULL << (hi - 1)) - 1);

    const auto num_groups = static_cast<std::int64_t>(num_amps >> 2);

#pragma omp parallel for if (num_groups >= kParallelGrain) schedule(static)
    for (std::int64_t i = 0; i < num_groups; ++i) {
        const auto ui = static_cast<std::uint64_t>(i);
        const std::uint64_t base =
            ((ui & hi_mask) << 2) | ((ui & mid_mask) << 1) | (ui & lo_mask);
        const std::uint64_t i00 = base;
        const std::uint64_t i01 = base | mask_lo2;
        const std::uint64_t i10 = base | mask_hi2;
        const std::uint64_t i11 = base | mask_hi2 | mask_lo2;

        const Complex a00 = amps[i00];
        const Complex a01 = amps[i01];
        const Complex a10 = amps[i10];
        const Complex a11 = amps[i11];

        amps[i00] = u[0] * a00 + u[1] * a01 + u[2] * a10 + u[3] * a11;
        amps[i01] = u[4] * a00 + u[5] * a01 + u[6] * a10 + u[7] * a11;
        amps[i10] = u[8] * a00 + u[9] * a01 + u[10] * a10 + u[11] * a11;
        amps[i11] = u[12] * a00 + u[13] * a01 + u[14] * a10 + u[15] * a11;
    }
}

void apply_pauli(Complex *amps, std::size_t num_amps, int bit, int pauli) {
    const std::uint64_t mask = 1ULL << bit;
    const std::uint64_t lo_mask = mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
    const auto num_pairs = static_cast<std::int64_t>(num_amps >> 1);
    constexpr Complex kImag(0.0, 1.0);

#pragma omp parallel for if (num_pairs >= kParallelGrain) schedule(static)
    for (std::int64_t i = 0; i < num_pairs; ++i) {
        const auto ui = static_cast<std::uint64_t>(i);
        const std::uint64_t i0 = ((ui & hi_mask) << 1) | (ui & lo_mask);
        const std::uint64_t i1 = i0 | mask;
        switch (pauli) {
        case 1:
            std::swap(amps[i0], amps[i1]);
            break;
        case 2: {
            const Complex a0 = amps[i0];
            amps[i0] = -kImag * amps[i1];
            amps[i1] = kImag * a0;
            break;
        }
        case 3:
            amps[i1] = -amps[i1];
            break;
        default:
            break; // 0 = identity
        }
    }
}

void permute_bits(const Complex *src, Complex *dst, std::size_t num_amps, const int *bit_map,
                  int nbits) {
    const auto count = static_cast<std::int64_t>(num_amps);
#pragma omp parallel for if (count >= 2 * kParallelGrain) schedule(static)
    for (std::int64_t x = 0; x < count; ++x) {
        const auto ux = static_cast<std::uint64_t>(x);
        std::uint64_t y = 0;
        for (int b = 0; b < nbits; ++b) {
            y |= ((ux >> b) & 1ULL) << bit_map[b];
        }
        dst[y] = src[ux];
    }
}

void probabilities(const Complex *amps, std::size_t num_amps, double *probs) {
    const auto count = static_cast<std::int64_t>(num_amps);
#pragma omp parallel for if (count >= 2 * kParallelGrain) schedule(static)
    for (std::int64_t x = 0; x < count; ++x) {
        probs[x] = std::norm(amps[x]);
    }
}

double norm_squared(const Complex *amps, std::size_t num_amps) {
    double total = 0.0;
    for (std::size_t x = 0; x < num_amps; ++x) {
        total += std::norm(amps[x]);
    }
    return total;
}

namespace reference {

void apply_two_qubit_gate(Complex *amps, std::size_t num_amps, int bit_hi2, int bit_lo2,
                          const GateMatrix &u) {
    const std::vector<Complex> old(amps, amps + num_amps);
    for (std::uint64_t x = 0; x < num_amps; ++x) {
        const std::uint64_t g = (((x >> bit_hi2) & 1ULL) << 1) | ((x >> bit_lo2) & 1ULL);
        Complex acc = 0.0;
        for (std::uint64_t j = 0; j < 4; ++j) {
            std::uint64_t source = x;
            source &= ~((1ULL << bit_hi2) | (1ULL << bit_lo2));
            source |= ((j >> 1) & 1ULL) << bit_hi2;
            source |= (j & 1ULL) << bit_lo2;
            acc += u[4 * g + j] * old[source];
        }
        amps[x] = acc;
    }
}

void apply_pauli(Complex *amps, std::size_t num_amps, int bit, int pauli) {
    constexpr Complex kImag(0.0, 1.0);
    const std::vector<Complex> old(amps, amps + num_amps);
    for (std::uint64_t x = 0; x < num_amps; ++x) {
        const std::uint64_t flipped = x ^ (1ULL << bit);
        const bool bit_set = (x >> bit) & 1ULL;
        switch (pauli) {
        case 1:
            amps[x] = old[flipped];
            break;
        case 2:
            amps[x] = (bit_set ? kImag : -kImag) * old[flipped];
            break;
        case 3:
            amps[x] = bit_set ? -old[x] : old[x];
            break;
        default:
            amps[x] = old[x];
            break;
        }
    }
}

void permute_bits(const Complex *src, Complex *dst, std::size_t num_amps, const int *bit_map,
                  int nbits) {
    for (std::uint64_t x = 0; x < num_amps; ++x) {
        std::uint64_t y = 0;
        for (int b = 0; b < nbits; ++b) {
            y |= ((x >> b) & 1ULL) << bit_map[b];
        }
        dst[y] = src[x];
    }
}

void probabilities(const Complex *amps, std::size_t num_amps, double *probs) {
    for (std::uint64_t x = 0; x < num_amps; ++x) {
        probs[x] = std::norm(amps[x]);
    }
}

} // namespace reference

} // namespace volbench::kernels
