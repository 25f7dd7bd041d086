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

#include <algorithm>
#include <numeric>
#include <set>

#include "volbench/density_matrix.hpp"
#include "volbench/errors.hpp"
#include "volbench/random_circuit.hpp"
#include "volbench/statevector.hpp"
#include "volbench/topology.hpp"

using namespace volbench;

namespace {

// Applies the swap layers to the identity arrangement and then the
// relabeling; the result must equal the requested permutation.
std::vector<int> realized_permutation(const RoutedLayer &routed, int n) {
    std::vector<int> position_of(static_cast<std::size_t>(n));
    std::iota(position_of.begin(), position_of.end(), 0);
    for (const auto &layer : routed.swap_layers) {
        for (const auto &[a, b] : layer) {
            for (int &pos : position_of) {
                if (pos == a) {
                    pos = b;
                } else if (pos == b) {
                    pos = a;
                }
            }
        }
    }
    std::vector<int> result(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        result[i] = routed.relabeling[position_of[i]];
    }
    return result;
}

void check_routed_layer(const RoutedLayer &routed, const std::vector<int> &perm,
                        const Topology &topology) {
    REQUIRE(realized_permutation(routed, topology.size) == perm);
    for (const auto &layer : routed.swap_layers) {
        std::set<int> touched;
        for (const auto &[a, b] : layer) {
            REQUIRE(topology.adjacent(a, b));
            REQUIRE(touched.insert(a).second);
            REQUIRE(touched.insert(b).second);
        }
    }
}

} // namespace

TEST_SUITE("topology") {

    TEST_CASE("identity permutation needs no swaps") {
        for (const Topology &topo :
             {Topology::all_to_all(4), Topology::line(4), Topology::ring(4),
              Topology::grid(2, 2)}) {
            const RoutedLayer routed = route_permutation({0, 1, 2, 3}, topo);
            CHECK(routed.swap_depth() == 0);
        }
    }

    TEST_CASE("all-to-all routes by relabeling alone") {
        const std::vector<int> perm = {2, 0, 3, 1};
        const RoutedLayer routed = route_permutation(perm, Topology::all_to_all(4));
        CHECK(routed.swap_layers.empty());
        CHECK(routed.relabeling == perm);
    }

    TEST_CASE("line reversal fits in the odd-even bound") {
        const std::vector<int> reversal = {3, 2, 1, 0};
        const Topology line = Topology::line(4);
        const RoutedLayer routed = route_permutation(reversal, line);
        CHECK(routed.swap_depth() <= 4);
        check_routed_layer(routed, reversal, line);
    }

    TEST_CASE("every permutation routes correctly on lines up to n = 6") {
        for (int n = 2; n <= 6; ++n) {
            const Topology line = Topology::line(n);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                const RoutedLayer routed = route_permutation(perm, line);
                REQUIRE(routed.swap_depth() <= n);
                check_routed_layer(routed, perm, line);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    TEST_CASE("ring and grid routing stay adjacent and correct") {
        for (std::uint64_t i = 0; i < 30; ++i) {
            const std::vector<int> perm = random_permutation(6, SeedSpec{90, {i}});
            for (const Topology &topo :
                 {Topology::ring(6), Topology::grid(2, 3), Topology::grid(3, 2)}) {
                check_routed_layer(route_permutation(perm, topo), perm, topo);
            }
        }
    }

    TEST_CASE("physical depth equals logical depth on all-to-all") {
        const Circuit c = build_model_circuit(5, 9, SeedSpec{91, {}});
        CHECK(physical_depth(c, Topology::all_to_all(5)) == 9);
    }

    TEST_CASE("line reversal layer costs at most five physical layers") {
        Circuit c;
        c.width = 4;
        Layer layer;
        layer.permutation = {3, 2, 1, 0};
        layer.gates.push_back({{0, 1}, Unitary4::Identity()});
        layer.gates.push_back({{2, 3}, Unitary4::Identity()});
        c.layers.push_back(std::move(layer));
        CHECK(physical_depth(c, Topology::line(4)) <= 5);
    }

    TEST_CASE("identity-permutation circuits cost logical depth everywhere") {
        Circuit c;
        c.width = 4;
        for (int d = 0; d < 6; ++d) {
            Layer layer;
            layer.permutation = {0, 1, 2, 3};
            layer.gates.push_back({{0, 1}, Unitary4::Identity()});
            layer.gates.push_back({{2, 3}, Unitary4::Identity()});
            c.layers.push_back(std::move(layer));
        }
        for (const Topology &topo :
             {Topology::all_to_all(4), Topology::line(4), Topology::ring(4),
              Topology::grid(2, 2)}) {
            CHECK(physical_depth(c, topo) == 6);
        }
    }

    TEST_CASE("routing preserves the output distribution") {
        // routed simulation (swaps explicit, relabeling tracked) must equal
        // the logical ideal distribution to 1e-9
        for (int n = 2; n <= 5; ++n) {
            for (std::uint64_t i = 0; i < 3; ++i) {
                const Circuit c =
                    build_model_circuit(n, 4, SeedSpec{92, {static_cast<std::uint64_t>(n), i}});
                const std::vector<double> ideal = ideal_probabilities(c);
                for (const Topology &topo : {Topology::all_to_all(n), Topology::line(n)}) {
                    const RoutedCircuit routed = route_circuit(c, topo);
                    const std::vector<double> routed_probs =
                        noisy_distribution_exact(compile_program(routed), NoiseModel{});
                    REQUIRE(routed_probs.size() == ideal.size());
                    for (std::size_t x = 0; x < ideal.size(); ++x) {
                        REQUIRE(std::abs(routed_probs[x] - ideal[x]) <= 1e-9);
                    }
                }
            }
        }
    }

    TEST_CASE("topology strings parse") {
        CHECK(parse_topology("all2all", 5).kind == TopologyKind::AllToAll);
        CHECK(parse_topology("line", 5).kind == TopologyKind::Line);
        CHECK(parse_topology("ring", 5).kind == TopologyKind::Ring);
        const Topology grid = parse_topology("grid:2x3", 6);
        CHECK(grid.kind == TopologyKind::Grid);
        CHECK(grid.grid_width == 2);
        CHECK_THROWS_AS(parse_topology("star", 4), UnsupportedError);
        CHECK_THROWS_AS(parse_topology("grid:2x2", 5), UnsupportedError);
        CHECK_THROWS_AS(parse_topology("grid:x", 4), UnsupportedError);
    }
}
