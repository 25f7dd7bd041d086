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

// volbench: volumetric benchmark runner, scaling classifier, survey tables,
// and circuit utilities.  Exit codes: 0 success, 2 usage/domain error,
// 3 capacity error, 4 table check failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "volbench/errors.hpp"
#include "volbench/random_circuit.hpp"
#include "volbench/report.hpp"
#include "volbench/survey.hpp"
#include "volbench/topology.hpp"
#include "volbench/trajectory.hpp"

namespace {

using namespace volbench;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitCheckFailed = 4;

std::string read_file(const std::string &path) {
    std::ifstream file(path);
    if (!file.good()) {
        throw SchemaError("cannot open '" + path + "'");
    }
    std::stringstream content;
    content << file.rdbuf();
    return content.str();
}

void write_output(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file.good()) {
        throw SchemaError("cannot write '" + path + "'");
    }
    file << content << '\n';
}

std::uint64_t env_seed_or(std::uint64_t fallback) {
    const char *env = std::getenv("VOLBENCH_SEED");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    return std::strtoull(env, nullptr, 10);
}

// ---- run --------------------------------------------------------------

struct RunFlags {
    std::string classes;
    std::optional<int> n_max;
    std::optional<int> circuits;
    std::optional<std::uint64_t> shots;
    std::optional<double> p1, p2, p_swap, p_readout;
    std::optional<std::string> topology;
    std::optional<std::string> pairing;
    std::optional<std::uint64_t> seed;
    std::optional<int> jobs;
    std::string config_path;
    std::string out_path;
};

std::vector<int> parse_classes(const std::string &text) {
    if (text == "all") {
        return {1, 2, 3, 4, 5};
    }
    std::vector<int> classes;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const int k = std::stoi(item);
        if (k < kMinClass || k > kMaxClass) {
            throw std::domain_error("class must lie in [1, 5], got " + item);
        }
        classes.push_back(k);
    }
    if (classes.empty()) {
        throw std::domain_error("no classes requested");
    }
    return classes;
}

int cmd_run(const RunFlags &flags) {
    RunConfig config;
    if (!flags.config_path.empty()) {
        config = config_from_json(read_file(flags.config_path));
    }

    // precedence: flags > config file > defaults
    if (!flags.classes.empty()) {
        config.classes = parse_classes(flags.classes);
    }
    if (flags.n_max) {
        config.n_max.clear();
        for (int k : config.classes) {
            config.n_max[k] = *flags.n_max;
        }
    }
    if (flags.circuits) {
        config.circuits = *flags.circuits;
    }
    if (flags.shots) {
        config.shots = *flags.shots;
    }
    if (flags.p1) {
        config.noise.p1 = *flags.p1;
    }
    if (flags.p2) {
        config.noise.p2 = *flags.p2;
    }
    if (flags.p_swap) {
        config.noise.p_swap = *flags.p_swap;
    }
    if (flags.p_readout) {
        config.noise.p_readout = *flags.p_readout;
    }
    if (flags.topology) {
        config.topology = *flags.topology;
    }
    if (flags.pairing) {
        config.pairing = parse_pairing(*flags.pairing);
    }
    if (flags.seed) {
        config.seed = *flags.seed;
    } else if (flags.config_path.empty()) {
        config.seed = env_seed_or(config.seed);
    }
    if (flags.jobs) {
        config.jobs = *flags.jobs;
    }
    if (config.jobs > 0) {
        omp_set_num_threads(config.jobs);
    }

    const RunReport report = run_benchmark(config);
    print_report_summary(report, std::cout);
    if (!flags.out_path.empty()) {
        write_output(flags.out_path, report_to_json(report));
        std::cout << "report written to " << flags.out_path << '\n';
    } else {
        write_output("-", report_to_json(report));
    }
    return kExitOk;
}

// ---- classify ----------------------------------------------------------

int cmd_classify(const std::string &scaling_text, const std::string &estimate_text,
                 bool as_json) {
    const ScalingDescriptor scaling = parse_scaling_expression(scaling_text);
    const EstimateType estimate = parse_estimate_type(estimate_text);
    if (const auto warning = scaling_form_warning(scaling)) {
        std::cerr << "warning: " << *warning << '\n';
    }
    const int initial = classify_initial(scaling);
    const int adjusted = classify_adjusted(scaling, estimate);
    if (as_json) {
        nlohmann::ordered_json j;
        j["scaling"] = scaling_form_label(scaling);
        j["estimate_type"] = to_string(estimate);
        j["initial_class"] = initial;
        j["adjusted_class"] = adjusted;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << scaling_form_label(scaling) << " (" << to_string(estimate) << ")\n"
                  << "initial:  QV-" << initial << '\n'
                  << "adjusted: QV-" << adjusted << '\n';
    }
    return kExitOk;
}

// ---- tables --------------------------------------------------------------

void print_table(const SurveyTable &table, const std::string &title, std::ostream &out) {
    out << title << '\n';
    out << "  class  " << std::left << std::setw(24) << "circuit depth"
        << "count\n";
    int last_class = 0;
    for (const auto &row : table.rows) {
        out << "  " << std::setw(7)
            << (row.k != last_class ? "QV-" + std::to_string(row.k) : "") << std::setw(24)
            << row.form << row.count << " (" << row.percent << "%)\n";
        last_class = row.k;
    }
    out << "  totals:";
    for (const auto &[k, count] : table.class_totals) {
        out << "  QV-" << k << ": " << count << " (" << table.class_percent.at(k) << "%)";
    }
    out << '\n';
}

nlohmann::ordered_json table_json(const SurveyTable &table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        rows.push_back({{"class", row.k},
                        {"depth_scaling", row.form},
                        {"count", row.count},
                        {"percent", row.percent}});
    }
    nlohmann::ordered_json totals = nlohmann::ordered_json::object();
    for (const auto &[k, count] : table.class_totals) {
        totals[std::to_string(k)] = count;
    }
    return {{"rows", std::move(rows)}, {"class_totals", std::move(totals)}};
}

int cmd_tables(const std::string &dataset_path, bool check, bool as_json) {
    const std::vector<AlgorithmRecord> records =
        dataset_path.empty() ? builtin_records() : load_dataset(read_file(dataset_path));

    const SurveyTable initial = tabulate(records, TabulationMode::Initial);
    const SurveyTable final_table = tabulate(records, TabulationMode::Adjusted);
    const std::vector<AdjustmentRow> adjustments = tabulate_adjustments(records);
    const auto estimates = estimate_type_counts(records);
    const auto areas = application_area_counts(records);
    const auto eras = era_counts(records);

    if (as_json) {
        nlohmann::ordered_json j;
        j["records"] = records.size();
        j["initial"] = table_json(initial);
        nlohmann::ordered_json adj = nlohmann::ordered_json::array();
        for (const auto &row : adjustments) {
            adj.push_back(
                {{"depth", row.form}, {"adjusted", row.adjusted}, {"kept", row.kept}});
        }
        j["adjustments"] = std::move(adj);
        j["final"] = table_json(final_table);
        nlohmann::ordered_json marginals;
        for (const auto &[type, count] : estimates) {
            marginals["estimate_type"][to_string(type)] = count;
        }
        for (const auto &[area, count] : areas) {
            marginals["application_area"][to_string(area)] = count;
        }
        for (const auto &[era, count] : eras) {
            marginals["era"][to_string(era)] = count;
        }
        j["marginals"] = std::move(marginals);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << records.size() << " records\n\n";
        print_table(initial, "Initial classes by circuit-depth scaling", std::cout);
        std::cout << "\nOverhead adjustment (boundary scalings)\n";
        for (const auto &row : adjustments) {
            std::cout << "  " << std::left << std::setw(8) << row.form << "adjusted "
                      << std::setw(4) << row.adjusted << "kept " << row.kept << '\n';
        }
        std::cout << '\n';
        print_table(final_table, "Final classes after adjustment", std::cout);
        std::cout << "\nEstimate types:";
        for (const auto &[type, count] : estimates) {
            std::cout << "  " << to_string(type) << ": " << count;
        }
        std::cout << "\nApplication areas:";
        for (const auto &[area, count] : areas) {
            std::cout << "  " << to_string(area) << ": " << count;
        }
        std::cout << "\nEras:";
        for (const auto &[era, count] : eras) {
            std::cout << "  " << to_string(era) << ": " << count;
        }
        std::cout << '\n';
    }

    if (check) {
        const std::vector<std::string> mismatches = check_reference_tables(records);
        if (!mismatches.empty()) {
            std::cerr << "table check FAILED:\n";
            for (const std::string &m : mismatches) {
                std::cerr << "  " << m << '\n';
            }
            return kExitCheckFailed;
        }
        std::cout << "table check passed: all counts match the reference tables\n";
    }
    return kExitOk;
}

// ---- circuit ---------------------------------------------------------------

int cmd_circuit_gen(int width, long long depth, std::uint64_t seed, const std::string &pairing,
                    const std::string &out_path) {
    const Circuit circuit =
        build_model_circuit(width, depth, SeedSpec{seed, {0}}, parse_pairing(pairing));
    write_output(out_path, serialize(circuit));
    return kExitOk;
}

int cmd_circuit_simulate(const std::string &in_path, std::uint64_t shots,
                         const NoiseModel &noise, const std::string &topology,
                         std::uint64_t seed, const std::string &out_path) {
    const Circuit circuit = deserialize(read_file(in_path));

    if (shots == 0) {
        const std::vector<double> probs = ideal_probabilities(circuit);
        nlohmann::ordered_json j;
        j["width"] = circuit.width;
        j["probs"] = probs;
        write_output(out_path, j.dump());
        return kExitOk;
    }

    const Topology topo = parse_topology(topology, circuit.width);
    ShotCounts counts;
    if (topo.kind == TopologyKind::AllToAll) {
        counts = sample_noisy_trajectory(circuit, noise, shots, SeedSpec{seed, {1}});
    } else {
        counts = sample_noisy_trajectory(compile_program(route_circuit(circuit, topo)), noise,
                                         shots, SeedSpec{seed, {1}});
    }
    write_output(out_path, counts.to_json());
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"volumetric quantum benchmark suite"};
    app.require_subcommand(1);

    // run
    RunFlags run_flags;
    CLI::App *run = app.add_subcommand("run", "run the volumetric benchmark");
    run->add_option("--class", run_flags.classes, "volumetric class: 1..5, list, or 'all'");
    run->add_option("--n-max", run_flags.n_max, "largest width to test (per-class defaults)");
    run->add_option("--circuits", run_flags.circuits, "model circuits per width");
    run->add_option("--shots", run_flags.shots, "shots per circuit");
    run->add_option("--p1", run_flags.p1, "1-qubit depolarizing probability");
    run->add_option("--p2", run_flags.p2, "2-qubit depolarizing probability per gate");
    run->add_option("--p-swap", run_flags.p_swap, "depolarizing probability per routed SWAP");
    run->add_option("--p-readout", run_flags.p_readout, "readout bit-flip probability");
    run->add_option("--topology", run_flags.topology, "all2all | line | ring | grid:WxH");
    run->add_option("--pairing", run_flags.pairing, "adjacent | random-disjoint");
    run->add_option("--seed", run_flags.seed, "master seed (VOLBENCH_SEED as fallback)");
    run->add_option("--jobs", run_flags.jobs, "worker cap; results identical for any value");
    run->add_option("--config", run_flags.config_path, "config JSON (or a previous report)");
    run->add_option("--out", run_flags.out_path, "report path (default: stdout)");

    // classify
    std::string scaling_text, estimate_text = "gate-depth";
    bool classify_json = false;
    CLI::App *classify = app.add_subcommand("classify", "classify a depth scaling");
    classify->add_option("--scaling", scaling_text, "expression, e.g. n^2, n^3*log, polylog")
        ->required();
    classify->add_option("--estimate", estimate_text, "gate-depth | gate-count | runtime");
    classify->add_flag("--json", classify_json, "JSON output");

    // tables
    std::string dataset_path;
    bool tables_check = false, tables_json = false;
    CLI::App *tables = app.add_subcommand("tables", "survey classification tables");
    tables->add_option("--dataset", dataset_path, "CSV dataset (default: bundled)");
    tables->add_flag("--check", tables_check, "verify counts against the reference tables");
    tables->add_flag("--json", tables_json, "JSON output");

    // circuit gen | simulate
    CLI::App *circuit = app.add_subcommand("circuit", "generate or simulate circuits");
    circuit->require_subcommand(1);

    int gen_width = 4;
    long long gen_depth = 4;
    std::optional<std::uint64_t> gen_seed;
    std::string gen_pairing = "adjacent", gen_out;
    CLI::App *gen = circuit->add_subcommand("gen", "generate a model circuit");
    gen->add_option("--width", gen_width, "qubit count")->required();
    gen->add_option("--depth", gen_depth, "layer count")->required();
    gen->add_option("--seed", gen_seed, "master seed (VOLBENCH_SEED as fallback)");
    gen->add_option("--pairing", gen_pairing, "adjacent | random-disjoint");
    gen->add_option("--out", gen_out, "output path (default: stdout)");

    std::string sim_in, sim_topology = "all2all", sim_out;
    std::uint64_t sim_shots = 0;
    std::optional<std::uint64_t> sim_seed;
    NoiseModel sim_noise;
    CLI::App *simulate = circuit->add_subcommand(
        "simulate", "ideal probabilities (shots=0) or noisy sampling");
    simulate->add_option("--in", sim_in, "circuit JSON path")->required();
    simulate->add_option("--shots", sim_shots, "0 = exact ideal distribution");
    simulate->add_option("--p1", sim_noise.p1, "1-qubit depolarizing probability");
    simulate->add_option("--p2", sim_noise.p2, "2-qubit depolarizing probability");
    simulate->add_option("--p-swap", sim_noise.p_swap, "per routed SWAP");
    simulate->add_option("--p-readout", sim_noise.p_readout, "readout flip probability");
    simulate->add_option("--topology", sim_topology, "all2all | line | ring | grid:WxH");
    simulate->add_option("--seed", sim_seed, "master seed (VOLBENCH_SEED as fallback)");
    simulate->add_option("--out", sim_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            return cmd_run(run_flags);
        }
        if (classify->parsed()) {
            return cmd_classify(scaling_text, estimate_text, classify_json);
        }
        if (tables->parsed()) {
            return cmd_tables(dataset_path, tables_check, tables_json);
        }
        if (gen->parsed()) {
            return cmd_circuit_gen(gen_width, gen_depth,
                                   gen_seed ? *gen_seed : env_seed_or(0), gen_pairing, gen_out);
        }
        if (simulate->parsed()) {
            return cmd_circuit_simulate(sim_in, sim_shots, sim_noise, sim_topology,
                                        sim_seed ? *sim_seed : env_seed_or(0), sim_out);
        }
    } catch (const CapacityError &e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const SchemaError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
