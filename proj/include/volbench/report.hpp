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
 * Run orchestration and machine-readable reports.
 *
 * A report echoes its full configuration (including the RNG algorithm and
 * master seed); re-running that configuration reproduces every numeric
 * field except the timestamp and timings, for any worker count.
 */

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "volbench/volumetric.hpp"

namespace volbench {

inline constexpr const char *kToolVersion = "0.1.0";

struct RunConfig {
    std::vector<int> classes = {1};
    std::map<int, int> n_max; ///< resolved per class; empty entries use defaults
    int circuits = 100;
    std::uint64_t shots = 1000;
    NoiseModel noise;
    std::string topology = "all2all";
    Pairing pairing = Pairing::Adjacent;
    std::uint64_t seed = 0;
    int jobs = 0;

    /// Fills n_max defaults for every requested class.
    void resolve();
};

struct RunReport {
    std::string tool_version;
    std::string timestamp;
    RunConfig config;
    std::vector<VolumetricScore> scores;
    double total_seconds = 0.0;
    std::map<int, double> per_class_seconds;
};

/// Runs every requested class.  Deterministic in everything but timings.
RunReport run_benchmark(const RunConfig &config);

std::string config_to_json(const RunConfig &config);

/// Parses a config object, or a full report (its "config" member is used),
/// so a report replays itself.  Throws SchemaError.
RunConfig config_from_json(const std::string &text);

std::string report_to_json(const RunReport &report);

/// True when the two report JSONs agree on every field except timestamp and
/// timings.
bool reports_equivalent(const std::string &report_json_a, const std::string &report_json_b);

/// Short digest of the canonical config JSON (FNV-1a, hex).
std::string config_digest(const RunConfig &config);

void print_report_summary(const RunReport &report, std::ostream &out);

std::string to_string(Pairing pairing);
Pairing parse_pairing(const std::string &text);

} // namespace volbench
