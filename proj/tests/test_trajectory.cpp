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

#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "volbench/errors.hpp"
#include "volbench/random_circuit.hpp"
#include "volbench/trajectory.hpp"

using namespace volbench;

namespace {

Circuit bell_circuit() {
    const double s = 1.0 / std::sqrt(2.0);
    Unitary4 u;
    u << s, 0, 0, s, //
        0, s, s, 0,  //
        0, s, -s, 0, //
        s, 0, 0, -s;
    Circuit c;
    c.width = 2;
    Layer layer;
    layer.permutation = {0, 1};
    layer.gates.push_back({{0, 1}, u});
    c.layers.push_back(std::move(layer));
    return c;
}

bool counts_equal(const ShotCounts &a, const ShotCounts &b) {
    return a.total_shots == b.total_shots && a.counts == b.counts;
}

} // namespace

TEST_SUITE("trajectory") {

    TEST_CASE("noiseless bell sampling hits only 00 and 11") {
        const std::uint64_t shots = 10000;
        const ShotCounts counts =
            sample_noisy_trajectory(bell_circuit(), NoiseModel{}, shots, SeedSpec{100, {}});
        CHECK(counts.total_shots == shots);
        for (const auto &[outcome, n] : counts.counts) {
            CHECK((outcome == 0 || outcome == 3));
        }
        const double frac00 = static_cast<double>(counts.counts.at(0)) / shots;
        const double sigma = std::sqrt(0.25 / shots);
        CHECK(std::abs(frac00 - 0.5) <= 3.0 * sigma);
    }

    TEST_CASE("full two-qubit depolarizing gives the uniform distribution") {
        // oracle: the fully depolarizing channel leaves the maximally mixed
        // state, so every 2-bit outcome has probability 1/4
        NoiseModel noise;
        noise.p2 = 1.0;
        const std::uint64_t shots = 40000;
        const Circuit c = build_model_circuit(2, 1, SeedSpec{101, {}});
        const ShotCounts counts =
            sample_noisy_trajectory(c, noise, shots, SeedSpec{102, {}});
        const double sigma = std::sqrt(shots * 0.25 * 0.75);
        for (std::uint64_t x = 0; x < 4; ++x) {
            const auto it = counts.counts.find(x);
            REQUIRE(it != counts.counts.end());
            CHECK(std::abs(static_cast<double>(it->second) - shots * 0.25) <= 3.0 * sigma);
        }
    }

    TEST_CASE("certain readout flips swap the outcome roles") {
        NoiseModel flip;
        flip.p_readout = 1.0;
        const std::uint64_t shots = 2000;
        const SeedSpec seed{103, {}};
        const ShotCounts plain =
            sample_noisy_trajectory(bell_circuit(), NoiseModel{}, shots, seed);
        const ShotCounts flipped = sample_noisy_trajectory(bell_circuit(), flip, shots, seed);
        // flipping both bits exchanges 00 and 11 deterministically
        CHECK(flipped.counts.at(3) == plain.counts.at(0));
        CHECK(flipped.counts.at(0) == plain.counts.at(3));
    }

    TEST_CASE("sampling is deterministic and thread-count independent") {
        NoiseModel noise;
        noise.p2 = 0.1;
        noise.p_readout = 0.05;
        const Circuit c = build_model_circuit(3, 4, SeedSpec{104, {}});
        const SeedSpec seed{105, {}};

        const int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        const ShotCounts a = sample_noisy_trajectory(c, noise, 5000, seed);
        omp_set_num_threads(2);
        const ShotCounts b = sample_noisy_trajectory(c, noise, 5000, seed);
        omp_set_num_threads(saved);

        CHECK(counts_equal(a, b));
    }

    TEST_CASE("the noiseless shortcut equals the per-shot path") {
        const Circuit c = build_model_circuit(4, 3, SeedSpec{106, {}});
        NoiseModel readout_only;
        readout_only.p_readout = 0.2;
        for (const NoiseModel &noise : {NoiseModel{}, readout_only}) {
            TrajectoryOptions literal;
            literal.force_per_shot = true;
            const SeedSpec seed{107, {}};
            const ShotCounts fast = sample_noisy_trajectory(c, noise, 3000, seed);
            const ShotCounts slow = sample_noisy_trajectory(c, noise, 3000, seed, literal);
            CHECK(counts_equal(fast, slow));
        }
    }

    TEST_CASE("width cap propagates as a capacity error") {
        TrajectoryOptions opts;
        opts.sim.width_cap = 3;
        const Circuit c = build_model_circuit(4, 1, SeedSpec{108, {}});
        CHECK_THROWS_AS(sample_noisy_trajectory(c, NoiseModel{}, 10, SeedSpec{1, {}}, opts),
                        CapacityError);
    }

    TEST_CASE("counts serialize with big-endian bitstrings") {
        ShotCounts counts;
        counts.width = 2;
        counts.add(1, 3); // qubit 1 set -> "01"
        counts.add(2, 5); // qubit 0 set -> "10"
        const std::string json = counts.to_json();
        CHECK(json.find("\"01\":3") != std::string::npos);
        CHECK(json.find("\"10\":5") != std::string::npos);
        const ShotCounts back = ShotCounts::from_json(json);
        CHECK(counts_equal(back, counts));
    }

    TEST_CASE("merging counts is order independent") {
        ShotCounts a, b;
        a.width = b.width = 2;
        a.add(0, 2);
        a.add(3, 1);
        b.add(3, 4);
        b.add(1, 1);
        ShotCounts ab = a;
        ab.merge(b);
        ShotCounts ba = b;
        ba.merge(a);
        CHECK(counts_equal(ab, ba));
        CHECK(ab.total_shots == 8);
    }
}
