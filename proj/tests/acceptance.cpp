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

// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails.  Every tolerance is pinned here, not tuned at run time.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "volbench/density_matrix.hpp"
#include "volbench/errors.hpp"
#include "volbench/heavy_output.hpp"
#include "volbench/random_circuit.hpp"
#include "volbench/report.hpp"
#include "volbench/statevector.hpp"
#include "volbench/survey.hpp"
#include "volbench/topology.hpp"
#include "volbench/trajectory.hpp"
#include "volbench/volumetric.hpp"

using namespace volbench;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string &)> check; // fills a detail string on failure
};

// --- 1: exact table reproduction -------------------------------------------

bool check_tables(std::string &detail) {
    const std::vector<AlgorithmRecord> records = builtin_records();
    const std::vector<std::string> mismatches = check_reference_tables(records);
    if (!mismatches.empty()) {
        detail = mismatches.front();
        return false;
    }
    const std::string cli = std::string(VOLBENCH_CLI_PATH) + " tables --check > /dev/null";
    if (std::system(cli.c_str()) != 0) {
        detail = "tables --check returned nonzero";
        return false;
    }
    return true;
}

// --- 2: ideal heavy-output level --------------------------------------------

bool check_ideal_hop_level(std::string &detail) {
    for (int n : {4, 5, 6}) {
        const int circuits = 200;
        double mass_sum = 0.0;
        for (int c = 0; c < circuits; ++c) {
            const Circuit circuit = build_model_circuit(
                n, n,
                SeedSpec{20260001, {static_cast<std::uint64_t>(n),
                                    static_cast<std::uint64_t>(c)}});
            mass_sum += heavy_set(ideal_probabilities(circuit)).ideal_heavy_mass;
        }
        const double mean = mass_sum / circuits;
        if (mean < 0.80 || mean > 0.89) {
            std::ostringstream msg;
            msg << "n=" << n << ": mean ideal HOP " << mean << " outside [0.80, 0.89]";
            detail = msg.str();
            return false;
        }
    }
    return true;
}

// --- 3: noiseless scores reach n_max ----------------------------------------

bool check_noiseless_scores(std::string &detail) {
    ProtocolConfig config;
    config.circuits = 20;
    config.shots = 500;
    const int n_max[] = {8, 8, 6, 5};
    for (int k = 1; k <= 4; ++k) {
        const VolumetricScore score =
            compute_score(k, NoiseModel{}, config, n_max[k - 1], SeedSpec{20260003, {}});
        if (score.score != n_max[k - 1]) {
            std::ostringstream msg;
            msg << "k=" << k << ": score " << score.score << " != n_max " << n_max[k - 1];
            detail = msg.str();
            return false;
        }
    }
    return true;
}

// --- 4: fully-noisy floor ----------------------------------------------------

bool check_noisy_floor(std::string &detail) {
    NoiseModel noise;
    noise.p2 = 1.0;
    ProtocolConfig config;
    config.circuits = 20;
    config.shots = 500;
    for (int k = 1; k <= 5; ++k) {
        const VolumetricScore score =
            compute_score(k, noise, config, 4, SeedSpec{20260004, {}});
        if (score.score != 0) {
            detail = "k=" + std::to_string(k) + ": score " + std::to_string(score.score);
            return false;
        }
        const double pooled = score.widths.front().heavy.pooled_hop;
        if (pooled > 0.55) {
            std::ostringstream msg;
            msg << "k=" << k << ": width-2 pooled HOP " << pooled << " > 0.55";
            detail = msg.str();
            return false;
        }
    }
    return true;
}

// --- 5: monotone degradation --------------------------------------------------

bool check_monotone_degradation(std::string &detail) {
    NoiseModel noise;
    noise.p2 = 0.02;
    ProtocolConfig config;
    config.circuits = 50;
    config.shots = 500;
    int scores[5] = {0, 0, 0, 0, 0};
    for (int k = 1; k <= 4; ++k) {
        scores[k] =
            compute_score(k, noise, config, default_n_max(k), SeedSpec{1, {}}).score;
    }
    if (!(scores[4] <= scores[3] && scores[3] <= scores[2] && scores[2] <= scores[1])) {
        std::ostringstream msg;
        msg << "scores k=1..4: " << scores[1] << " " << scores[2] << " " << scores[3] << " "
            << scores[4];
        detail = msg.str();
        return false;
    }
    return true;
}

// --- 6: engine cross-validation ------------------------------------------------

bool check_engine_cross_validation(std::string &detail) {
    NoiseModel noise;
    noise.p2 = 0.05;
    for (int i = 0; i < 20; ++i) {
        const int depth = 1 + i % 8;
        const Circuit circuit = build_model_circuit(
            3, depth, SeedSpec{20260006, {static_cast<std::uint64_t>(i), 0}});
        const std::vector<double> exact = noisy_distribution_exact(circuit, noise);
        const ShotCounts counts = sample_noisy_trajectory(
            circuit, noise, 100000, SeedSpec{20260006, {static_cast<std::uint64_t>(i), 1}});
        double tv = 0.0;
        for (std::uint64_t x = 0; x < exact.size(); ++x) {
            const auto it = counts.counts.find(x);
            const double freq = it == counts.counts.end()
                                    ? 0.0
                                    : static_cast<double>(it->second) / 100000.0;
            tv += std::abs(freq - exact[x]);
        }
        tv *= 0.5;
        if (tv > 0.02) {
            std::ostringstream msg;
            msg << "circuit " << i << " (d=" << depth << "): TV distance " << tv << " > 0.02";
            detail = msg.str();
            return false;
        }
    }
    return true;
}

// --- 7: routing soundness --------------------------------------------------------

bool check_routing(std::string &detail) {
    // exhaustive swap-network check on lines up to n = 6
    for (int n = 2; n <= 6; ++n) {
        const Topology line = Topology::line(n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            const RoutedLayer routed = route_permutation(perm, line);
            if (routed.swap_depth() > n) {
                detail = "swap depth exceeded n";
                return false;
            }
            std::vector<int> realized(static_cast<std::size_t>(n));
            std::iota(realized.begin(), realized.end(), 0);
            for (const auto &layer : routed.swap_layers) {
                for (const auto &[a, b] : layer) {
                    if (!line.adjacent(a, b)) {
                        detail = "non-adjacent swap emitted";
                        return false;
                    }
                    for (int &pos : realized) {
                        if (pos == a) {
                            pos = b;
                        } else if (pos == b) {
                            pos = a;
                        }
                    }
                }
            }
            for (int i = 0; i < n; ++i) {
                if (routed.relabeling[realized[i]] != perm[i]) {
                    detail = "swap composition mismatch at n=" + std::to_string(n);
                    return false;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // routed simulation must match the logical ideal distribution
    for (int i = 0; i < 10; ++i) {
        const int n = 2 + i % 4; // widths 2..5
        const Circuit circuit = build_model_circuit(
            n, 4, SeedSpec{20260007, {static_cast<std::uint64_t>(i)}});
        const std::vector<double> ideal = ideal_probabilities(circuit);
        for (const Topology &topo : {Topology::line(n), Topology::all_to_all(n)}) {
            const std::vector<double> routed = noisy_distribution_exact(
                compile_program(route_circuit(circuit, topo)), NoiseModel{});
            for (std::uint64_t x = 0; x < ideal.size(); ++x) {
                if (std::abs(routed[x] - ideal[x]) > 1e-9) {
                    std::ostringstream msg;
                    msg << "circuit " << i << " on " << topo.name() << ": outcome " << x
                        << " deviates by " << std::abs(routed[x] - ideal[x]);
                    detail = msg.str();
                    return false;
                }
            }
        }
    }
    return true;
}

// --- 8: determinism / replay --------------------------------------------------------

bool check_replay(std::string &detail) {
    RunConfig config;
    config.classes = {1, 2};
    config.n_max[1] = 4;
    config.n_max[2] = 3;
    config.circuits = 10;
    config.shots = 200;
    config.noise.p2 = 0.03;
    config.seed = 8;
    config.jobs = 1;

    const std::string original = report_to_json(run_benchmark(config));
    for (int jobs : {1, 8}) {
        RunConfig replay_config = config_from_json(original);
        replay_config.jobs = jobs;
        RunReport replay = run_benchmark(replay_config);
        replay.config.jobs = config.jobs; // the echoed worker cap may differ
        if (!reports_equivalent(original, report_to_json(replay))) {
            detail = "replay at jobs=" + std::to_string(jobs) + " altered numeric fields";
            return false;
        }
    }
    return true;
}

// --- 9: classifier laws ----------------------------------------------------------------

bool check_classifier_laws(std::string &detail) {
    // the enumerated scaling-to-class mapping
    const std::vector<std::tuple<long long, long long, int, int>> forms = {
        {0, 1, 0, 1}, {0, 1, 1, 1}, {0, 1, 2, 1}, {1, 2, 2, 1}, {1, 1, 0, 1}, {1, 1, 2, 2},
        {2, 1, 0, 2}, {2, 1, 2, 3}, {3, 1, 0, 3}, {3, 1, 1, 4}, {5, 1, 0, 5},
    };
    for (const auto &[num, den, q, expected] : forms) {
        ScalingDescriptor s;
        s.poly_degree = Rational{num, den};
        s.polylog_degree = q;
        if (classify_initial(s) != expected) {
            std::ostringstream msg;
            msg << "classify_initial(n^" << Rational{num, den}.to_string() << " log^" << q
                << ") != QV-" << expected;
            detail = msg.str();
            return false;
        }
    }

    Rng rng(SeedSpec{20260009, {}});
    for (int i = 0; i < 10000; ++i) {
        ScalingDescriptor s;
        s.poly_degree = Rational{static_cast<long long>(rng.uniform_int(12)),
                                 static_cast<long long>(1 + rng.uniform_int(4))};
        s.polylog_degree = static_cast<int>(rng.uniform_int(4));
        const auto type = static_cast<EstimateType>(rng.uniform_int(3));

        int initial;
        try {
            initial = classify_initial(s);
        } catch (const UnsupportedError &) {
            continue;
        }
        const int adjusted = classify_adjusted(s, type);
        if (adjusted < initial) {
            detail = "adjustment lowered a class";
            return false;
        }
        if (type == EstimateType::GateCountOrOperations && adjusted != initial) {
            detail = "gate-count estimate was adjusted";
            return false;
        }
        const bool boundary =
            s.polylog_degree == 0 &&
            (s.poly_degree == Rational{1, 1} || s.poly_degree == Rational{2, 1} ||
             s.poly_degree == Rational{3, 1});
        if (!boundary && adjusted != initial) {
            detail = "non-boundary scaling was adjusted";
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "table reproduction (exact counts, marginals)", check_tables},
        {2, "ideal heavy-output level in [0.80, 0.89] for n = 4, 5, 6", check_ideal_hop_level},
        {3, "noiseless scores reach n_max = (8, 8, 6, 5) for k = 1..4", check_noiseless_scores},
        {4, "fully-noisy floor: every class scores 0 at p2 = 1", check_noisy_floor},
        {5, "monotone degradation of scores across classes at p2 = 0.02",
         check_monotone_degradation},
        {6, "trajectory vs density-matrix TV distance <= 0.02", check_engine_cross_validation},
        {7, "routing soundness: swap bound, composition, semantics", check_routing},
        {8, "determinism: replay reproduces reports at jobs = 1 and 8", check_replay},
        {9, "classifier laws on 10^4 random scalings", check_classifier_laws},
    };

    int failures = 0;
    for (const Criterion &criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.check(detail);
        } catch (const std::exception &e) {
            detail = std::string("exception: ") + e.what();
        }
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.number << ": "
                  << criterion.name << " (" << std::fixed << std::setprecision(1)
                  << elapsed.count() << " s)";
        if (!ok) {
            std::cout << " -- " << detail;
            ++failures;
        }
        std::cout << std::endl;
        std::cout.unsetf(std::ios_base::floatfield);
    }

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
    }
    return failures;
}
