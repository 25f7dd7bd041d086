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
 * Qubit connectivity and permutation routing.
 *
 * Constrained topologies realize each layer's permutation with layers of
 * disjoint adjacent SWAPs found by odd-even transposition sorting; an
 * all-to-all topology realizes it as a free relabeling.  Routing quantifies
 * the physical-depth overhead of limited connectivity and attaches a p_swap
 * noise opportunity to every inserted SWAP.
 */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "volbench/circuit.hpp"

namespace volbench {

enum class TopologyKind { AllToAll, Line, Ring, Grid };

struct Topology {
    TopologyKind kind = TopologyKind::AllToAll;
    int size = 0;
    int grid_width = 0;  // Grid only
    int grid_height = 0; // Grid only

    static Topology all_to_all(int n);
    static Topology line(int n);
    static Topology ring(int n);
    static Topology grid(int w, int h);

    [[nodiscard]] bool adjacent(int a, int b) const;
    [[nodiscard]] std::string name() const;
};

/// "all2all" | "line" | "ring" | "grid:WxH" -> factory; throws
/// UnsupportedError otherwise.  size is taken from n.
Topology parse_topology(const std::string &text, int n);

using SwapPair = std::pair<int, int>;

/// One logical permutation realized on a topology.
struct RoutedLayer {
    /// Layers of pairwise-disjoint adjacent SWAPs, applied in order.
    std::vector<std::vector<SwapPair>> swap_layers;
    /// Free relabeling applied after the SWAPs; together they compose to the
    /// requested permutation.
    std::vector<int> relabeling;

    [[nodiscard]] int swap_depth() const { return static_cast<int>(swap_layers.size()); }
};

/// Routes one permutation.  For all-to-all the result is a pure relabeling;
/// for line/ring/grid the SWAP network realizes the permutation fully and
/// the relabeling is the identity.  Line routing needs at most n swap
/// layers (odd-even transposition bound).
RoutedLayer route_permutation(const std::vector<int> &perm, const Topology &topology);

/// Total physical layer count: per logical layer, its swap layers plus one
/// gate layer.  Equals the logical depth on all-to-all.
long long physical_depth(const Circuit &circuit, const Topology &topology);

/// A circuit lowered onto a topology.  Gate positions are physical;
/// output_relabel maps logical qubit -> physical position, so outcome bit q
/// of the logical circuit is physical bit output_relabel[q].
struct RoutedCircuit {
    int width = 0;
    struct PhysicalLayer {
        std::vector<std::vector<SwapPair>> swap_layers;
        std::vector<Gate> gates; // physical positions
    };
    std::vector<PhysicalLayer> layers;
    std::vector<int> output_relabel;

    [[nodiscard]] long long physical_depth() const;
};

RoutedCircuit route_circuit(const Circuit &circuit, const Topology &topology);

/// Remaps a physical outcome index back to logical qubit order.
std::uint64_t relabel_outcome(std::uint64_t physical, const std::vector<int> &output_relabel,
                              int width);

} // namespace volbench
