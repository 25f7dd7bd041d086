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

#include "volbench/noise.hpp"

#include <json.hpp>

#include <stdexcept>

#include "volbench/circuit.hpp"
#include "volbench/errors.hpp"

namespace volbench {

using ordered_json = nlohmann::ordered_json;

void NoiseModel::validate() const {
    for (double p : {p1, p2, p_swap, p_readout}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("noise probabilities must lie in [0, 1]");
        }
    }
}

void ShotCounts::add(std::uint64_t outcome, std::uint64_t n) {
    counts[outcome] += n;
    total_shots += n;
}

void ShotCounts::merge(const ShotCounts &other) {
    for (const auto &[outcome, n] : other.counts) {
        counts[outcome] += n;
    }
    total_shots += other.total_shots;
}

std::string ShotCounts::to_json() const {
    ordered_json j;
    j["shots"] = total_shots;
    ordered_json jc = ordered_json::object();
    for (const auto &[outcome, n] : counts) {
        jc[to_bitstring(outcome, width)] = n;
    }
    j["counts"] = std::move(jc);
    return j.dump();
}

ShotCounts ShotCounts::from_json(const std::string &text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw SchemaError(std::string("counts JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("shots") || !j.contains("counts") ||
        !j["counts"].is_object()) {
        throw SchemaError("counts JSON must contain 'shots' and a 'counts' object");
    }

    ShotCounts sc;
    std::uint64_t sum = 0;
    for (const auto &[bits, n] : j["counts"].items()) {
        if (sc.width == 0) {
            sc.width = static_cast<int>(bits.size());
        }
        const std::uint64_t outcome = from_bitstring(bits, sc.width);
        const auto count = n.get<std::uint64_t>();
        sc.counts[outcome] += count;
        sum += count;
    }
    sc.total_shots = j["shots"].get<std::uint64_t>();
    if (sum != sc.total_shots) {
        throw InvariantError("counts sum to " + std::to_string(sum) + ", expected " +
                             std::to_string(sc.total_shots));
    }
    return sc;
}

} // namespace volbench
