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

#include "volbench/random_circuit.hpp"

#include <Eigen/QR>
#include <stdexcept>

namespace volbench {

namespace {

// Within one layer, sub-stream ids for the permutation and the gates.
constexpr std::uint64_t kPermStream = 0;
constexpr std::uint64_t kGateStreamBase = 1;

} // namespace

Unitary4 haar_su4(const SeedSpec &seed) {
    Rng rng(seed);

    Unitary4 ginibre;
    for (int c = 0; c < 4; ++c) {
        for (int r = 0; r < 4; ++r) {
            // column-major fill order fixes the exact draw sequence
            ginibre(r, c) = Complex(rng.normal(), rng.normal());
        }
    }

    Eigen::HouseholderQR<Unitary4> qr(ginibre);
    Unitary4 q = qr.householderQ();
    const Unitary4 r = qr.matrixQR().triangularView<Eigen::Upper>();

    // Multiplying column j by r_jj/|r_jj| makes Q a Haar sample on U(4)
    // rather than merely a QR factor (Mezzadri's correction).
    for (int j = 0; j < 4; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }

    // det(Q) lies on the unit circle; divide out its principal fourth root.
    const Complex det = q.determinant();
    const Complex phase = std::polar(1.0, std::arg(det) / 4.0);
    q /= phase;
    return q;
}

std::vector<int> random_permutation(int n, const SeedSpec &seed) {
    if (n < 1) {
        throw std::invalid_argument("random_permutation: n must be >= 1");
    }
    Rng rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        perm[i] = i;
    }
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

Circuit build_model_circuit(int n, long long d, const SeedSpec &seed, Pairing pairing) {
    if (n < 2) {
        throw std::invalid_argument("build_model_circuit: width must be >= 2");
    }
    if (d < 1) {
        throw std::invalid_argument("build_model_circuit: depth must be >= 1");
    }

    Circuit circuit;
    circuit.width = n;
    circuit.layers.resize(static_cast<std::size_t>(d));

    for (long long li = 0; li < d; ++li) {
        const SeedSpec layer_seed = seed.child(static_cast<std::uint64_t>(li));
        Layer &layer = circuit.layers[static_cast<std::size_t>(li)];
        layer.permutation = random_permutation(n, layer_seed.child(kPermStream));

        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            order[i] = i;
        }
        if (pairing == Pairing::RandomDisjoint) {
            // A uniformly random ordering paired off in twos is uniform over
            // perfect matchings.
            order = random_permutation(n, layer_seed.child(kGateStreamBase + 1000));
        }

        for (int g = 0; g < n / 2; ++g) {
            Gate gate;
            gate.qubits = {order[2 * g], order[2 * g + 1]};
            gate.u = haar_su4(layer_seed.child(kGateStreamBase + static_cast<std::uint64_t>(g)));
            layer.gates.push_back(std::move(gate));
        }
    }
    return circuit;
}

} // namespace volbench
