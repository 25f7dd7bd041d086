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

#include "volbench/circuit.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstring>
#include <sstream>

#include "volbench/errors.hpp"

namespace volbench {

using ordered_json = nlohmann::ordered_json;

double unitarity_defect(const Unitary4 &u) {
    return (u.adjoint() * u - Unitary4::Identity()).cwiseAbs().maxCoeff();
}

double special_defect(const Unitary4 &u) { return std::abs(u.determinant() - 1.0); }

bool is_special_unitary(const Unitary4 &u, double tol) {
    return unitarity_defect(u) <= tol && special_defect(u) <= tol;
}

bool is_permutation(const std::vector<int> &perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto &v : violations) {
        if (v.layer >= 0) {
            out << "layer " << v.layer << ": ";
        }
        out << v.message << '\n';
    }
    return out.str();
}

ValidationReport validate(const Circuit &circuit) {
    ValidationReport report;
    auto complain = [&report](int layer, std::string msg) {
        report.violations.push_back({layer, std::move(msg)});
    };

    const int n = circuit.width;
    if (n < 1) {
        complain(-1, "width must be >= 1");
        return report;
    }

    for (int li = 0; li < circuit.depth(); ++li) {
        const Layer &layer = circuit.layers[li];

        if (static_cast<int>(layer.permutation.size()) != n) {
            complain(li, "permutation length != width");
        } else if (!is_permutation(layer.permutation)) {
            complain(li, "permutation is not a bijection");
        }

        if (static_cast<int>(layer.gates.size()) != n / 2) {
            std::ostringstream msg;
            msg << "expected " << n / 2 << " gates, found " << layer.gates.size();
            complain(li, msg.str());
        }

        std::vector<bool> used(static_cast<std::size_t>(std::max(n, 1)), false);
        for (const Gate &gate : layer.gates) {
            auto [a, b] = gate.qubits;
            if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
                std::ostringstream msg;
                msg << "gate pair (" << a << ", " << b << ") out of range or degenerate";
                complain(li, msg.str());
                continue;
            }
            if (used[a] || used[b]) {
                std::ostringstream msg;
                msg << "overlapping gate pairs at (" << a << ", " << b << ")";
                complain(li, msg.str());
            }
            used[a] = used[b] = true;

            const double udef = unitarity_defect(gate.u);
            if (udef > kUnitaryTolerance) {
                std::ostringstream msg;
                msg << "gate on (" << a << ", " << b << ") not unitary (defect " << udef << ")";
                complain(li, msg.str());
            } else if (special_defect(gate.u) > kUnitaryTolerance) {
                std::ostringstream msg;
                msg << "gate on (" << a << ", " << b << ") has |det - 1| = "
                    << special_defect(gate.u);
                complain(li, msg.str());
            }
        }
    }
    return report;
}

namespace {

ordered_json unitary_to_json(const Unitary4 &u) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < 4; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < 4; ++c) {
            row.push_back(ordered_json::array({u(r, c).real(), u(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Unitary4 unitary_from_json(const ordered_json &j) {
    if (!j.is_array() || j.size() != 4) {
        throw SchemaError("gate matrix must have 4 rows");
    }
    Unitary4 u;
    for (int r = 0; r < 4; ++r) {
        const auto &row = j[r];
        if (!row.is_array() || row.size() != 4) {
            throw SchemaError("gate matrix row must have 4 entries");
        }
        for (int c = 0; c < 4; ++c) {
            const auto &entry = row[c];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                throw SchemaError("matrix entry must be a [re, im] pair");
            }
            u(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return u;
}

} // namespace

std::string serialize(const Circuit &circuit) {
    ordered_json j;
    j["width"] = circuit.width;
    ordered_json layers = ordered_json::array();
    for (const Layer &layer : circuit.layers) {
        ordered_json jl;
        jl["perm"] = layer.permutation;
        ordered_json gates = ordered_json::array();
        for (const Gate &gate : layer.gates) {
            ordered_json jg;
            jg["pair"] = ordered_json::array({gate.qubits.first, gate.qubits.second});
            jg["u"] = unitary_to_json(gate.u);
            gates.push_back(std::move(jg));
        }
        jl["gates"] = std::move(gates);
        layers.push_back(std::move(jl));
    }
    j["layers"] = std::move(layers);
    return j.dump();
}

Circuit deserialize(const std::string &text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw SchemaError(std::string("circuit JSON parse error: ") + e.what());
    }

    if (!j.is_object() || !j.contains("width") || !j.contains("layers")) {
        throw SchemaError("circuit JSON must contain 'width' and 'layers'");
    }
    if (!j["width"].is_number_integer()) {
        throw SchemaError("'width' must be an integer");
    }

    Circuit circuit;
    circuit.width = j["width"].get<int>();
    if (!j["layers"].is_array()) {
        throw SchemaError("'layers' must be an array");
    }
    for (const auto &jl : j["layers"]) {
        if (!jl.is_object() || !jl.contains("perm") || !jl.contains("gates")) {
            throw SchemaError("layer must contain 'perm' and 'gates'");
        }
        Layer layer;
        if (!jl["perm"].is_array()) {
            throw SchemaError("'perm' must be an array");
        }
        for (const auto &v : jl["perm"]) {
            if (!v.is_number_integer()) {
                throw SchemaError("'perm' entries must be integers");
            }
            layer.permutation.push_back(v.get<int>());
        }
        for (const auto &jg : jl["gates"]) {
            if (!jg.is_object() || !jg.contains("pair") || !jg.contains("u")) {
                throw SchemaError("gate must contain 'pair' and 'u'");
            }
            const auto &pair = jg["pair"];
            if (!pair.is_array() || pair.size() != 2) {
                throw SchemaError("'pair' must be a two-element array");
            }
            Gate gate;
            gate.qubits = {pair[0].get<int>(), pair[1].get<int>()};
            gate.u = unitary_from_json(jg["u"]);
            layer.gates.push_back(std::move(gate));
        }
        circuit.layers.push_back(std::move(layer));
    }

    ValidationReport report = validate(circuit);
    if (!report.ok()) {
        throw InvariantError("deserialized circuit is invalid:\n" + report.to_string());
    }
    return circuit;
}

bool circuits_equal(const Circuit &a, const Circuit &b) {
    if (a.width != b.width || a.layers.size() != b.layers.size()) {
        return false;
    }
    for (std::size_t li = 0; li < a.layers.size(); ++li) {
        const Layer &la = a.layers[li];
        const Layer &lb = b.layers[li];
        if (la.permutation != lb.permutation || la.gates.size() != lb.gates.size()) {
            return false;
        }
        for (std::size_t gi = 0; gi < la.gates.size(); ++gi) {
            if (la.gates[gi].qubits != lb.gates[gi].qubits) {
                return false;
            }
            // bit equality, not tolerance: round trips must be exact
            if (std::memcmp(la.gates[gi].u.data(), lb.gates[gi].u.data(),
                            sizeof(Complex) * 16) != 0) {
                return false;
            }
        }
    }
    return true;
}

std::string to_bitstring(std::uint64_t x, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int q = 0; q < width; ++q) {
        if ((x >> (width - 1 - q)) & 1ULL) {
            s[q] = '1';
        }
    }
    return s;
}

std::uint64_t from_bitstring(const std::string &s, int width) {
    if (static_cast<int>(s.size()) != width) {
        throw SchemaError("bitstring '" + s + "' does not have width " + std::to_string(width));
    }
    std::uint64_t x = 0;
    for (int q = 0; q < width; ++q) {
        if (s[q] == '1') {
            x |= 1ULL << (width - 1 - q);
        } else if (s[q] != '0') {
            throw SchemaError("bitstring '" + s + "' contains a character other than 0/1");
        }
    }
    return x;
}

} // namespace volbench
