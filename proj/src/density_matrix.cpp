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

#include "volbench/density_matrix.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

#include "volbench/errors.hpp"

namespace volbench {

namespace {

constexpr double kTraceTolerance = 1e-9;

int bit_of(int qubit, int width) { return width - 1 - qubit; }

Unitary4 from_gate_matrix(const kernels::GateMatrix &m) {
    Unitary4 u;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            u(r, c) = m[4 * r + c];
        }
    }
    return u;
}

} // namespace

Complex DensityMatrix::trace() const {
    Complex t = 0.0;
    const std::size_t d = dim();
    for (std::size_t r = 0; r < d; ++r) {
        t += entries[r * d + r];
    }
    return t;
}

DensityMatrix dm_zero_state(int width, const SimOptions &opts) {
    if (width < 1) {
        throw std::invalid_argument("dm_zero_state: width must be >= 1");
    }
    if (width > opts.density_width_cap) {
        throw CapacityError("density-matrix width " + std::to_string(width) + " exceeds cap " +
                            std::to_string(opts.density_width_cap));
    }
    DensityMatrix rho;
    rho.width = width;
    const std::size_t d = rho.dim();
    rho.entries.assign(d * d, Complex(0.0, 0.0));
    rho.entries[0] = 1.0;
    return rho;
}

void dm_apply_gate(DensityMatrix &rho, const Unitary4 &u, std::pair<int, int> pair) {
    const auto [a, b] = pair;
    const int n = rho.width;
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
        throw std::out_of_range("dm_apply_gate: bad qubit pair");
    }
    const std::size_t d = rho.dim();
    const std::uint64_t mask_a = 1ULL << bit_of(a, n);
    const std::uint64_t mask_b = 1ULL << bit_of(b, n);

    auto sub_index = [&](std::uint64_t x) {
        return ((x & mask_a) ? 2u : 0u) | ((x & mask_b) ? 1u : 0u);
    };
    auto with_sub = [&](std::uint64_t x, unsigned g) {
        x &= ~(mask_a | mask_b);
        if (g & 2u) {
            x |= mask_a;
        }
        if (g & 1u) {
            x |= mask_b;
        }
        return x;
    };

    // rho -> U rho (ket index)
    std::vector<Complex> old = rho.entries;
    for (std::uint64_t r = 0; r < d; ++r) {
        const unsigned g = sub_index(r);
        for (std::uint64_t c = 0; c < d; ++c) {
            Complex acc = 0.0;
            for (unsigned j = 0; j < 4; ++j) {
                acc += u(g, j) * old[with_sub(r, j) * d + c];
            }
            rho.entries[r * d + c] = acc;
        }
    }

    // rho -> rho U' (bra index)
    old = rho.entries;
    for (std::uint64_t c = 0; c < d; ++c) {
        const unsigned g = sub_index(c);
        for (std::uint64_t r = 0; r < d; ++r) {
            Complex acc = 0.0;
            for (unsigned j = 0; j < 4; ++j) {
                acc += old[r * d + with_sub(c, j)] * std::conj(u(g, j));
            }
            rho.entries[r * d + c] = acc;
        }
    }
}

void dm_apply_permutation(DensityMatrix &rho, const std::vector<int> &perm) {
    const int n = rho.width;
    if (static_cast<int>(perm.size()) != n || !is_permutation(perm)) {
        throw std::invalid_argument("dm_apply_permutation: not a bijection on the width");
    }
    const std::size_t d = rho.dim();
    auto permute_index = [&](std::uint64_t x) {
        std::uint64_t y = 0;
        for (int q = 0; q < n; ++q) {
            const std::uint64_t bit = (x >> bit_of(q, n)) & 1ULL;
            y |= bit << bit_of(perm[q], n);
        }
        return y;
    };

    std::vector<Complex> out(d * d);
    for (std::uint64_t r = 0; r < d; ++r) {
        const std::uint64_t pr = permute_index(r);
        for (std::uint64_t c = 0; c < d; ++c) {
            out[pr * d + permute_index(c)] = rho.entries[r * d + c];
        }
    }
    rho.entries = std::move(out);
}

void dm_depolarize_pair(DensityMatrix &rho, std::pair<int, int> pair, double p) {
    if (p == 0.0) {
        return;
    }
    const auto [a, b] = pair;
    const int n = rho.width;
    const std::size_t d = rho.dim();
    const std::uint64_t mask_a = 1ULL << bit_of(a, n);
    const std::uint64_t mask_b = 1ULL << bit_of(b, n);
    const std::uint64_t pair_mask = mask_a | mask_b;

    auto with_sub = [&](std::uint64_t x, unsigned g) {
        x &= ~pair_mask;
        if (g & 2u) {
            x |= mask_a;
        }
        if (g & 1u) {
            x |= mask_b;
        }
        return x;
    };

    for (std::uint64_t r0 = 0; r0 < d; ++r0) {
        if (r0 & pair_mask) {
            continue;
        }
        for (std::uint64_t c0 = 0; c0 < d; ++c0) {
            if (c0 & pair_mask) {
                continue;
            }
            Complex partial_trace = 0.0;
            for (unsigned g = 0; g < 4; ++g) {
                partial_trace += rho.entries[with_sub(r0, g) * d + with_sub(c0, g)];
            }
            const Complex mixed = partial_trace * (p / 4.0);
            for (unsigned g1 = 0; g1 < 4; ++g1) {
                for (unsigned g2 = 0; g2 < 4; ++g2) {
                    Complex &entry = rho.entries[with_sub(r0, g1) * d + with_sub(c0, g2)];
                    entry *= (1.0 - p);
                    if (g1 == g2) {
                        entry += mixed;
                    }
                }
            }
        }
    }
}

void dm_depolarize_single(DensityMatrix &rho, int qubit, double p) {
    if (p == 0.0) {
        return;
    }
    const int n = rho.width;
    const std::size_t d = rho.dim();
    const std::uint64_t mask = 1ULL << bit_of(qubit, n);

    for (std::uint64_t r0 = 0; r0 < d; ++r0) {
        if (r0 & mask) {
            continue;
        }
        for (std::uint64_t c0 = 0; c0 < d; ++c0) {
            if (c0 & mask) {
                continue;
            }
            const Complex partial_trace =
                rho.entries[r0 * d + c0] + rho.entries[(r0 | mask) * d + (c0 | mask)];
            const Complex mixed = partial_trace * (p / 2.0);
            for (unsigned g1 = 0; g1 < 2; ++g1) {
                for (unsigned g2 = 0; g2 < 2; ++g2) {
                    const std::uint64_t r = g1 ? (r0 | mask) : r0;
                    const std::uint64_t c = g2 ? (c0 | mask) : c0;
                    Complex &entry = rho.entries[r * d + c];
                    entry *= (1.0 - p);
                    if (g1 == g2) {
                        entry += mixed;
                    }
                }
            }
        }
    }
}

double dm_hermiticity_defect(const DensityMatrix &rho) {
    const std::size_t d = rho.dim();
    double defect = 0.0;
    for (std::uint64_t r = 0; r < d; ++r) {
        for (std::uint64_t c = 0; c < d; ++c) {
            defect = std::max(defect,
                              std::abs(rho.entries[r * d + c] -
                                       std::conj(rho.entries[c * d + r])));
        }
    }
    return defect;
}

double dm_min_eigenvalue(const DensityMatrix &rho) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            m(r, c) = rho.entries[static_cast<std::size_t>(r) * d + c];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    return solver.eigenvalues().minCoeff();
}

std::vector<double> dm_diagonal(const DensityMatrix &rho) {
    const std::size_t d = rho.dim();
    std::vector<double> probs(d);
    for (std::uint64_t r = 0; r < d; ++r) {
        probs[r] = rho.entries[r * d + r].real();
    }
    return probs;
}

std::vector<double> apply_readout_flips(std::vector<double> probs, int width, double p_readout) {
    if (p_readout == 0.0) {
        return probs;
    }
    std::vector<double> next(probs.size());
    for (int q = 0; q < width; ++q) {
        const std::uint64_t mask = 1ULL << (width - 1 - q);
        for (std::uint64_t x = 0; x < probs.size(); ++x) {
            next[x] = (1.0 - p_readout) * probs[x] + p_readout * probs[x ^ mask];
        }
        probs.swap(next);
    }
    return probs;
}

std::vector<double> noisy_distribution_exact(const SimProgram &program, const NoiseModel &noise,
                                             const SimOptions &opts) {
    noise.validate();
    DensityMatrix rho = dm_zero_state(program.width, opts);

    for (const SimOp &op : program.ops) {
        switch (op.kind) {
        case SimOp::Kind::Permutation:
            dm_apply_permutation(rho, op.permutation);
            break;
        case SimOp::Kind::Su4Gate:
            dm_apply_gate(rho, from_gate_matrix(op.matrix), {op.a, op.b});
            dm_depolarize_pair(rho, {op.a, op.b}, noise.p2);
            break;
        case SimOp::Kind::SwapGate:
            dm_apply_gate(rho, from_gate_matrix(op.matrix), {op.a, op.b});
            dm_depolarize_pair(rho, {op.a, op.b}, noise.p_swap);
            break;
        case SimOp::Kind::LayerEnd:
            if (opts.check_invariants) {
                const double trace_defect = std::abs(rho.trace() - 1.0);
                if (trace_defect > kTraceTolerance) {
                    throw InvariantError("density-matrix trace drifted by " +
                                         std::to_string(trace_defect));
                }
                if (dm_hermiticity_defect(rho) > kTraceTolerance) {
                    throw InvariantError("density matrix lost hermiticity");
                }
            }
            break;
        }
    }

    std::vector<double> probs = dm_diagonal(rho);
    probs = apply_readout_flips(std::move(probs), program.width, noise.p_readout);

    // map physical outcome order back to logical qubit order
    bool identity = true;
    for (std::size_t q = 0; q < program.output_relabel.size(); ++q) {
        identity = identity && program.output_relabel[q] == static_cast<int>(q);
    }
    if (identity) {
        return probs;
    }
    std::vector<double> logical(probs.size());
    for (std::uint64_t x = 0; x < probs.size(); ++x) {
        logical[relabel_outcome(x, program.output_relabel, program.width)] = probs[x];
    }
    return logical;
}

std::vector<double> noisy_distribution_exact(const Circuit &circuit, const NoiseModel &noise,
                                             const SimOptions &opts) {
    return noisy_distribution_exact(compile_program(circuit), noise, opts);
}

} // namespace volbench
