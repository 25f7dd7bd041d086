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

#include "volbench/report.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iomanip>
#include <ostream>

#include "volbench/errors.hpp"
#include "volbench/seed_stream.hpp"

namespace volbench {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Pairing pairing) {
    return pairing == Pairing::Adjacent ? "adjacent" : "random-disjoint";
}

Pairing parse_pairing(const std::string &text) {
    if (text == "adjacent") {
        return Pairing::Adjacent;
    }
    if (text == "random-disjoint") {
        return Pairing::RandomDisjoint;
    }
    throw SchemaError("unknown pairing '" + text + "' (expected adjacent | random-disjoint)");
}

void RunConfig::resolve() {
    for (int k : classes) {
        if (k < kMinClass || k > kMaxClass) {
            throw std::domain_error("volumetric class must lie in [1, 5]");
        }
        if (!n_max.contains(k)) {
            n_max[k] = default_n_max(k);
        }
    }
}

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

ordered_json config_json(const RunConfig &config) {
    ordered_json j;
    j["seed"] = config.seed;
    j["rng"] = kRngAlgorithm;
    j["classes"] = config.classes;
    ordered_json jn = ordered_json::object();
    for (const auto &[k, n] : config.n_max) {
        jn[std::to_string(k)] = n;
    }
    j["n_max"] = std::move(jn);
    j["circuits"] = config.circuits;
    j["shots"] = config.shots;
    j["noise"] = {{"p1", config.noise.p1},
                  {"p2", config.noise.p2},
                  {"p_swap", config.noise.p_swap},
                  {"p_readout", config.noise.p_readout}};
    j["topology"] = config.topology;
    j["pairing"] = to_string(config.pairing);
    j["jobs"] = config.jobs;
    j["hop_rule"] = {{"threshold", kHeavyThreshold},
                     {"ci", "pooled minus two binomial sigma over circuits*shots"}};
    return j;
}

ordered_json width_json(const WidthResult &width) {
    ordered_json j;
    j["n"] = width.n;
    j["depth"] = width.depth;
    j["routed_depth"] = width.routed_depth;
    j["routed_depth_mean"] = width.routed_depth_mean;
    j["pooled_hop"] = width.heavy.pooled_hop;
    j["ci_low"] = width.heavy.ci_low;
    j["threshold"] = width.heavy.threshold;
    j["passed"] = width.heavy.passed;
    j["degenerate"] = width.heavy.degenerate;
    j["per_circuit_hop"] = width.heavy.per_circuit_hop;
    return j;
}

} // namespace

RunReport run_benchmark(const RunConfig &raw_config) {
    RunConfig config = raw_config;
    config.resolve();
    config.noise.validate();

    ProtocolConfig protocol;
    protocol.circuits = config.circuits;
    protocol.shots = config.shots;
    protocol.pairing = config.pairing;
    protocol.topology = config.topology;
    protocol.jobs = config.jobs;

    RunReport report;
    report.tool_version = kToolVersion;
    report.timestamp = utc_timestamp();
    report.config = config;

    const std::string digest = config_digest(config);
    const SeedSpec root{config.seed, {}};

    const auto run_start = std::chrono::steady_clock::now();
    for (int k : config.classes) {
        const auto class_start = std::chrono::steady_clock::now();
        VolumetricScore score =
            compute_score(k, config.noise, protocol, config.n_max.at(k), root);
        score.config_digest = digest;
        report.scores.push_back(std::move(score));
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - class_start;
        report.per_class_seconds[k] = elapsed.count();
    }
    const std::chrono::duration<double> total = std::chrono::steady_clock::now() - run_start;
    report.total_seconds = total.count();
    return report;
}

std::string config_to_json(const RunConfig &config) { return config_json(config).dump(); }

RunConfig config_from_json(const std::string &text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw SchemaError(std::string("config JSON parse error: ") + e.what());
    }
    if (j.is_object() && j.contains("config")) {
        j = j["config"]; // a full report replays through its echoed config
    }
    if (!j.is_object()) {
        throw SchemaError("config must be a JSON object");
    }

    RunConfig config;
    try {
        if (j.contains("seed")) {
            config.seed = j["seed"].get<std::uint64_t>();
        }
        if (j.contains("classes")) {
            config.classes = j["classes"].get<std::vector<int>>();
        } else if (j.contains("k")) {
            config.classes = {j["k"].get<int>()};
        }
        if (j.contains("n_max")) {
            for (const auto &[key, value] : j["n_max"].items()) {
                config.n_max[std::stoi(key)] = value.get<int>();
            }
        }
        if (j.contains("circuits")) {
            config.circuits = j["circuits"].get<int>();
        }
        if (j.contains("shots")) {
            config.shots = j["shots"].get<std::uint64_t>();
        }
        if (j.contains("noise")) {
            const auto &jn = j["noise"];
            if (jn.contains("p1")) {
                config.noise.p1 = jn["p1"].get<double>();
            }
            if (jn.contains("p2")) {
                config.noise.p2 = jn["p2"].get<double>();
            }
            if (jn.contains("p_swap")) {
                config.noise.p_swap = jn["p_swap"].get<double>();
            }
            if (jn.contains("p_readout")) {
                config.noise.p_readout = jn["p_readout"].get<double>();
            }
        }
        if (j.contains("topology")) {
            config.topology = j["topology"].get<std::string>();
        }
        if (j.contains("pairing")) {
            config.pairing = parse_pairing(j["pairing"].get<std::string>());
        }
        if (j.contains("jobs")) {
            config.jobs = j["jobs"].get<int>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw SchemaError(std::string("config JSON field error: ") + e.what());
    }
    return config;
}

std::string report_to_json(const RunReport &report) {
    ordered_json j;
    j["tool"] = "volbench";
    j["tool_version"] = report.tool_version;
    j["timestamp"] = report.timestamp;
    j["config"] = config_json(report.config);

    ordered_json scores = ordered_json::array();
    ordered_json routing = ordered_json::array();
    for (const VolumetricScore &score : report.scores) {
        ordered_json js;
        js["class"] = score.k;
        js["score"] = score.score;
        if (score.k == 1 && score.score <= 62) {
            js["quantum_volume"] = qv1_to_quantum_volume(score.score);
        }
        js["config_digest"] = score.config_digest;
        ordered_json widths = ordered_json::array();
        for (const WidthResult &width : score.widths) {
            widths.push_back(width_json(width));
            ordered_json jr;
            jr["class"] = score.k;
            jr["n"] = width.n;
            jr["logical_depth"] = width.depth;
            jr["physical_depth_max"] = width.routed_depth;
            jr["physical_depth_mean"] = width.routed_depth_mean;
            jr["overhead_ratio"] =
                static_cast<double>(width.routed_depth) / static_cast<double>(width.depth);
            routing.push_back(std::move(jr));
        }
        js["widths"] = std::move(widths);
        scores.push_back(std::move(js));
    }
    j["scores"] = std::move(scores);
    j["routing_overhead"] = std::move(routing);
    j["timings"] = {{"total_seconds", report.total_seconds}};
    for (const auto &[k, seconds] : report.per_class_seconds) {
        j["timings"]["class_" + std::to_string(k) + "_seconds"] = seconds;
    }
    return j.dump(2);
}

bool reports_equivalent(const std::string &report_json_a, const std::string &report_json_b) {
    ordered_json a = ordered_json::parse(report_json_a);
    ordered_json b = ordered_json::parse(report_json_b);
    for (auto *j : {&a, &b}) {
        j->erase("timestamp");
        j->erase("timings");
    }
    return a == b;
}

std::string config_digest(const RunConfig &config) {
    // jobs never affects the numbers, so it must not affect the digest
    RunConfig canonical = config;
    canonical.jobs = 0;
    const std::string text = config_to_json(canonical);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buffer[20];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

void print_report_summary(const RunReport &report, std::ostream &out) {
    out << "volbench " << report.tool_version << " | seed " << report.config.seed << " | "
        << report.config.circuits << " circuits x " << report.config.shots << " shots | noise p2="
        << report.config.noise.p2 << " p_swap=" << report.config.noise.p_swap << " p_readout="
        << report.config.noise.p_readout << " | topology " << report.config.topology << "\n";
    for (const VolumetricScore &score : report.scores) {
        out << "QV-" << score.k << " score: " << score.score;
        if (score.k == 1 && score.score <= 62) {
            out << " (volume 2^" << score.score << " = " << qv1_to_quantum_volume(score.score)
                << ")";
        }
        out << "\n";
        for (const WidthResult &width : score.widths) {
            out << "  n=" << width.n << " depth=" << width.depth;
            if (width.routed_depth != width.depth) {
                out << " physical<=" << width.routed_depth;
            }
            out << "  HOP " << std::fixed << std::setprecision(4) << width.heavy.pooled_hop
                << " (ci_low " << width.heavy.ci_low << ") "
                << (width.heavy.passed ? "pass" : "FAIL") << "\n";
            out.unsetf(std::ios_base::floatfield);
        }
    }
    out << "elapsed " << std::setprecision(3) << report.total_seconds << " s\n";
}

} // namespace volbench
