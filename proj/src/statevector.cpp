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

#include "volbench/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "volbench/errors.hpp"
#include "volbench/kernels.hpp"

namespace volbench {

namespace {

constexpr double kNormTolerance = 1e-9;

// qubit q occupies bit (width - 1 - q) of the amplitude index
int bit_of(int qubit, int width) { return width - 1 - qubit; }

kernels::GateMatrix to_gate_matrix(const Unitary4 &u) {
    kernels::GateMatrix m;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            m[4 * r + c] = u(r, c);
        }
    }
    return m;
}

} // namespace

StateVector zero_state(int width, const SimOptions &opts) {
    if (width < 1) {
        throw std::invalid_argument("zero_state: width must be >= 1");
    }
    if (width > opts.width_cap) {
        throw CapacityError("state-vector width " + std::to_string(width) +
                            " exceeds cap " + std::to_string(opts.width_cap));
    }
    StateVector state;
    state.width = width;
    state.amps.assign(std::size_t{1} << width, Complex(0.0, 0.0));
    state.amps[0] = Complex(1.0, 0.0);
    return state;
}

void apply_gate(StateVector &state, const Unitary4 &u, std::pair<int, int> pair) {
    const auto [a, b] = pair;
    if (a < 0 || a >= state.width || b < 0 || b >= state.width || a == b) {
        throw std::out_of_range("apply_gate: bad qubit pair (" + std::to_string(a) + ", " +
                                std::to_string(b) + ") at width " + std::to_string(state.width));
    }
    kernels::apply_two_qubit_gate(state.amps.data(), state.size(), bit_of(a, state.width),
                                  bit_of(b, state.width), to_gate_matrix(u));
}

void apply_permutation(StateVector &state, const std::vector<int> &perm) {
    if (static_cast<int>(perm.size()) != state.width || !is_permutation(perm)) {
        throw std::invalid_argument("apply_permutation: not a bijection on the state width");
    }
    std::vector<int> bit_map(perm.size());
    for (int q = 0; q < state.width; ++q) {
        bit_map[bit_of(q, state.width)] = bit_of(perm[q], state.width);
    }
    std::vector<Complex> dst(state.size());
    kernels::permute_bits(state.amps.data(), dst.data(), state.size(), bit_map.data(),
                          state.width);
    state.amps = std::move(dst);
}

void apply_layer(StateVector &state, const Layer &layer) {
    apply_permutation(state, layer.permutation);
    for (const Gate &gate : layer.gates) {
        apply_gate(state, gate.u, gate.qubits);
    }
}

std::vector<double> born_probabilities(const StateVector &state) {
    std::vector<double> probs(state.size());
    kernels::probabilities(state.amps.data(), state.size(), probs.data());
    return probs;
}

double norm_squared(const StateVector &state) {
    return kernels::norm_squared(state.amps.data(), state.size());
}

std::vector<double> ideal_probabilities(const Circuit &circuit, const SimOptions &opts) {
    StateVector state = zero_state(circuit.width, opts);
    for (const Layer &layer : circuit.layers) {
        apply_layer(state, layer);
        if (opts.check_invariants) {
            const double norm = norm_squared(state);
            if (std::abs(norm - 1.0) > kNormTolerance) {
                throw InvariantError("state norm drifted to " + std::to_string(norm));
            }
        }
    }
    return born_probabilities(state);
}

} // namespace volbench
