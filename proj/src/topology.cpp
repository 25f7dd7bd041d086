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

#include "volbench/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "volbench/errors.hpp"

namespace volbench {

Topology Topology::all_to_all(int n) { return {TopologyKind::AllToAll, n, 0, 0}; }
Topology Topology::line(int n) { return {TopologyKind::Line, n, 0, 0}; }
Topology Topology::ring(int n) { return {TopologyKind::Ring, n, 0, 0}; }

Topology Topology::grid(int w, int h) {
    if (w < 1 || h < 1) {
        throw UnsupportedError("grid dimensions must be positive");
    }
    return {TopologyKind::Grid, w * h, w, h};
}

bool Topology::adjacent(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= size || b >= size) {
        return false;
    }
    switch (kind) {
    case TopologyKind::AllToAll:
        return true;
    case TopologyKind::Line:
        return std::abs(a - b) == 1;
    case TopologyKind::Ring:
        return std::abs(a - b) == 1 || std::abs(a - b) == size - 1;
    case TopologyKind::Grid: {
        const int ra = a / grid_width, ca = a % grid_width;
        const int rb = b / grid_width, cb = b % grid_width;
        return (ra == rb && std::abs(ca - cb) == 1) || (ca == cb && std::abs(ra - rb) == 1);
    }
    }
    return false;
}

std::string Topology::name() const {
    switch (kind) {
    case TopologyKind::AllToAll:
        return "all2all";
    case TopologyKind::Line:
        return "line";
    case TopologyKind::Ring:
        return "ring";
    case TopologyKind::Grid:
        return "grid:" + std::to_string(grid_width) + "x" + std::to_string(grid_height);
    }
    return "?";
}

Topology parse_topology(const std::string &text, int n) {
    if (text == "all2all") {
        return Topology::all_to_all(n);
    }
    if (text == "line") {
        return Topology::line(n);
    }
    if (text == "ring") {
        return Topology::ring(n);
    }
    if (text.rfind("grid:", 0) == 0) {
        const std::string dims = text.substr(5);
        const auto x = dims.find('x');
        if (x != std::string::npos) {
            try {
                const int w = std::stoi(dims.substr(0, x));
                const int h = std::stoi(dims.substr(x + 1));
                if (w * h != n) {
                    throw UnsupportedError("grid " + dims + " does not hold " +
                                           std::to_string(n) + " qubits");
                }
                return Topology::grid(w, h);
            } catch (const std::logic_error &) {
                // fall through to the generic error
            }
        }
    }
    throw UnsupportedError("unsupported topology '" + text +
                           "' (expected all2all | line | ring | grid:WxH)");
}

namespace {

// Positions ordered so that consecutive entries are topology-adjacent.
// Lines and rings use natural order; grids snake through rows
// (boustrophedon), which keeps row boundaries adjacent.
std::vector<int> linearization(const Topology &topology) {
    std::vector<int> order(static_cast<std::size_t>(topology.size));
    if (topology.kind == TopologyKind::Grid) {
        int s = 0;
        for (int r = 0; r < topology.grid_height; ++r) {
            for (int c = 0; c < topology.grid_width; ++c) {
                const int col = (r % 2 == 0) ? c : topology.grid_width - 1 - c;
                order[s++] = r * topology.grid_width + col;
            }
        }
    } else {
        for (int i = 0; i < topology.size; ++i) {
            order[i] = i;
        }
    }
    return order;
}

// Odd-even transposition sort of the items along the linearization; emits
// one swap layer per nonempty round.  Guaranteed to finish within n rounds.
std::vector<std::vector<SwapPair>> sort_to_targets(const std::vector<int> &order,
                                                   std::vector<int> keys) {
    const int n = static_cast<int>(keys.size());
    std::vector<std::vector<SwapPair>> swap_layers;
    for (int round = 0; round <= n; ++round) {
        if (std::is_sorted(keys.begin(), keys.end())) {
            return swap_layers;
        }
        std::vector<SwapPair> layer;
        for (int s = round % 2; s + 1 < n; s += 2) {
            if (keys[s] > keys[s + 1]) {
                std::swap(keys[s], keys[s + 1]);
                layer.emplace_back(order[s], order[s + 1]);
            }
        }
        if (!layer.empty()) {
            swap_layers.push_back(std::move(layer));
        }
    }
    throw std::logic_error("odd-even transposition failed to converge");
}

} // namespace

RoutedLayer route_permutation(const std::vector<int> &perm, const Topology &topology) {
    if (static_cast<int>(perm.size()) != topology.size) {
        throw std::invalid_argument("route_permutation: permutation size " +
                                    std::to_string(perm.size()) + " != topology size " +
                                    std::to_string(topology.size));
    }
    if (!is_permutation(perm)) {
        throw std::invalid_argument("route_permutation: not a bijection");
    }

    RoutedLayer routed;
    if (topology.kind == TopologyKind::AllToAll) {
        routed.relabeling = perm;
        return routed;
    }

    const std::vector<int> order = linearization(topology);
    std::vector<int> slot_of(order.size());
    for (std::size_t s = 0; s < order.size(); ++s) {
        slot_of[order[s]] = static_cast<int>(s);
    }

    // The item at slot s is the qubit at position order[s]; its sort key is
    // the slot of its destination.  Sorting the keys realizes the
    // permutation physically, so no relabeling remains.
    std::vector<int> keys(order.size());
    for (std::size_t s = 0; s < order.size(); ++s) {
        keys[s] = slot_of[perm[order[s]]];
    }
    routed.swap_layers = sort_to_targets(order, std::move(keys));
    routed.relabeling.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        routed.relabeling[i] = static_cast<int>(i);
    }
    return routed;
}

long long physical_depth(const Circuit &circuit, const Topology &topology) {
    long long depth = 0;
    for (const Layer &layer : circuit.layers) {
        depth += route_permutation(layer.permutation, topology).swap_depth() + 1;
    }
    return depth;
}

long long RoutedCircuit::physical_depth() const {
    long long depth = 0;
    for (const PhysicalLayer &layer : layers) {
        depth += static_cast<long long>(layer.swap_layers.size()) + 1;
    }
    return depth;
}

RoutedCircuit route_circuit(const Circuit &circuit, const Topology &topology) {
    if (topology.size != circuit.width) {
        throw std::invalid_argument("route_circuit: topology size != circuit width");
    }

    RoutedCircuit routed;
    routed.width = circuit.width;
    routed.layers.reserve(circuit.layers.size());

    // pos[j] = physical position of the qubit at logical position j.
    std::vector<int> pos(static_cast<std::size_t>(circuit.width));
    for (int i = 0; i < circuit.width; ++i) {
        pos[i] = i;
    }

    for (const Layer &layer : circuit.layers) {
        RoutedCircuit::PhysicalLayer phys;
        const std::vector<int> &perm = layer.permutation;

        if (topology.kind == TopologyKind::AllToAll) {
            // free relabeling: new logical position perm[i] is wherever the
            // qubit already sits
            std::vector<int> new_pos(pos.size());
            for (std::size_t i = 0; i < perm.size(); ++i) {
                new_pos[perm[i]] = pos[i];
            }
            pos = std::move(new_pos);
        } else {
            // pos stays the identity: the SWAP network moves states for real
            phys.swap_layers = route_permutation(perm, topology).swap_layers;
        }

        phys.gates.reserve(layer.gates.size());
        for (const Gate &gate : layer.gates) {
            Gate g = gate;
            g.qubits = {pos[gate.qubits.first], pos[gate.qubits.second]};
            phys.gates.push_back(std::move(g));
        }
        routed.layers.push_back(std::move(phys));
    }

    routed.output_relabel = std::move(pos);
    return routed;
}

std::uint64_t relabel_outcome(std::uint64_t physical, const std::vector<int> &output_relabel,
                              int width) {
    std::uint64_t logical = 0;
    for (int q = 0; q < width; ++q) {
        const int phys_bit = width - 1 - output_relabel[q];
        const std::uint64_t bit = (physical >> phys_bit) & 1ULL;
        logical |= bit << (width - 1 - q);
    }
    return logical;
}

} // namespace volbench
