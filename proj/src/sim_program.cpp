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

#include "volbench/sim_program.hpp"

namespace volbench {

namespace {

kernels::GateMatrix to_gate_matrix(const Unitary4 &u) {
    kernels::GateMatrix m;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            m[4 * r + c] = u(r, c);
        }
    }
    return m;
}

std::vector<int> identity_map(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[i] = i;
    }
    return v;
}

} // namespace

kernels::GateMatrix swap_gate_matrix() {
    kernels::GateMatrix m{};
    m[0] = 1.0;  // |00> -> |00>
    m[6] = 1.0;  // |01> -> |10>
    m[9] = 1.0;  // |10> -> |01>
    m[15] = 1.0; // |11> -> |11>
    return m;
}

SimProgram compile_program(const Circuit &circuit) {
    SimProgram program;
    program.width = circuit.width;
    program.output_relabel = identity_map(circuit.width);
    for (const Layer &layer : circuit.layers) {
        SimOp perm;
        perm.kind = SimOp::Kind::Permutation;
        perm.permutation = layer.permutation;
        program.ops.push_back(std::move(perm));
        for (const Gate &gate : layer.gates) {
            SimOp op;
            op.kind = SimOp::Kind::Su4Gate;
            op.a = gate.qubits.first;
            op.b = gate.qubits.second;
            op.matrix = to_gate_matrix(gate.u);
            program.ops.push_back(std::move(op));
        }
        SimOp end;
        end.kind = SimOp::Kind::LayerEnd;
        program.ops.push_back(std::move(end));
    }
    return program;
}

SimProgram compile_program(const RoutedCircuit &routed) {
    SimProgram program;
    program.width = routed.width;
    program.output_relabel = routed.output_relabel;
    const kernels::GateMatrix swap = swap_gate_matrix();
    for (const auto &layer : routed.layers) {
        for (const auto &swap_layer : layer.swap_layers) {
            for (const auto &[a, b] : swap_layer) {
                SimOp op;
                op.kind = SimOp::Kind::SwapGate;
                op.a = a;
                op.b = b;
                op.matrix = swap;
                program.ops.push_back(std::move(op));
            }
        }
        for (const Gate &gate : layer.gates) {
            SimOp op;
            op.kind = SimOp::Kind::Su4Gate;
            op.a = gate.qubits.first;
            op.b = gate.qubits.second;
            op.matrix = to_gate_matrix(gate.u);
            program.ops.push_back(std::move(op));
        }
        SimOp end;
        end.kind = SimOp::Kind::LayerEnd;
        program.ops.push_back(std::move(end));
    }
    return program;
}

} // namespace volbench
