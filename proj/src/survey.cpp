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

#include "volbench/survey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "volbench/errors.hpp"

namespace volbench {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    if (num < 0 || den < 0) {
        throw std::invalid_argument("scaling exponents must be nonnegative");
    }
    const long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

long long Rational::floor() const { return num / den; }

long long Rational::ceil() const { return (num + den - 1) / den; }

std::string Rational::to_string() const {
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::operator+(const Rational &other) const {
    return {num * other.den + other.num * den, den * other.den};
}

Rational Rational::parse(const std::string &text) {
    if (text.empty()) {
        throw SchemaError("empty rational");
    }
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
        }
        const auto dot = text.find('.');
        if (dot != std::string::npos) {
            const std::string whole = text.substr(0, dot);
            const std::string frac = text.substr(dot + 1);
            if (frac.size() > 9) {
                throw SchemaError("decimal '" + text + "' has too many digits");
            }
            long long den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) {
                den *= 10;
            }
            const long long whole_part = whole.empty() ? 0 : std::stoll(whole);
            const long long frac_part = frac.empty() ? 0 : std::stoll(frac);
            return {whole_part * den + frac_part, den};
        }
        return {std::stoll(text), 1};
    } catch (const std::logic_error &) {
        throw SchemaError("cannot parse rational '" + text + "'");
    }
}

std::string to_string(EstimateType e) {
    switch (e) {
    case EstimateType::GateDepth:
        return "gate-depth";
    case EstimateType::GateCountOrOperations:
        return "gate-count";
    case EstimateType::RuntimeOrTimeComplexity:
        return "runtime";
    }
    return "?";
}

std::string to_string(Era e) { return e == Era::NISQ ? "NISQ" : "FT"; }

std::string to_string(ApplicationArea a) {
    switch (a) {
    case ApplicationArea::MachineLearning:
        return "machine-learning";
    case ApplicationArea::Optimization:
        return "optimization";
    case ApplicationArea::ManyBodyPhysicsChemistry:
        return "many-body-physics-chemistry";
    case ApplicationArea::QuantumDataHiding:
        return "quantum-data-hiding";
    case ApplicationArea::NumericalSolvers:
        return "numerical-solvers";
    case ApplicationArea::Other:
        return "other";
    }
    return "?";
}

EstimateType parse_estimate_type(const std::string &text) {
    if (text == "gate-depth") {
        return EstimateType::GateDepth;
    }
    if (text == "gate-count") {
        return EstimateType::GateCountOrOperations;
    }
    if (text == "runtime") {
        return EstimateType::RuntimeOrTimeComplexity;
    }
    throw SchemaError("unknown estimate type '" + text +
                      "' (expected gate-depth | gate-count | runtime)");
}

Era parse_era(const std::string &text) {
    if (text == "NISQ") {
        return Era::NISQ;
    }
    if (text == "FT") {
        return Era::FT;
    }
    throw SchemaError("unknown era '" + text + "' (expected NISQ | FT)");
}

ApplicationArea parse_application_area(const std::string &text) {
    for (ApplicationArea a :
         {ApplicationArea::MachineLearning, ApplicationArea::Optimization,
          ApplicationArea::ManyBodyPhysicsChemistry, ApplicationArea::QuantumDataHiding,
          ApplicationArea::NumericalSolvers, ApplicationArea::Other}) {
        if (text == to_string(a)) {
            return a;
        }
    }
    throw SchemaError("unknown application area '" + text + "'");
}

std::string scaling_form_label(const ScalingDescriptor &s) {
    const Rational &p = s.poly_degree;
    const int q = s.polylog_degree;
    if (p == Rational{0, 1}) {
        if (q == 0) {
            return "O(1)";
        }
        return q == 1 ? "O(log(n))" : "O(log^x(n))";
    }
    if (p == Rational{1, 2} && q >= 1) {
        return "O(sqrt(n) polylog(n))";
    }
    if (p == Rational{1, 1}) {
        return q == 0 ? "O(n)" : "O(n polylog(n))";
    }
    if (p == Rational{2, 1}) {
        return q == 0 ? "O(n^2)" : "O(n^2 polylog(n))";
    }
    if (p == Rational{3, 1}) {
        return q == 0 ? "O(n^3)" : "O(n^3 log(n))";
    }
    if (p == Rational{5, 1} && q == 0) {
        return "O(n^5)";
    }
    // not one of the surveyed forms
    std::string label = "O(n^" + p.to_string();
    if (q > 0) {
        label += " log^" + std::to_string(q) + "(n)";
    }
    label += ")";
    return label;
}

std::optional<std::string> scaling_form_warning(const ScalingDescriptor &s) {
    static const std::vector<std::string> &known = canonical_form_order();
    const std::string label = scaling_form_label(s);
    if (std::find(known.begin(), known.end(), label) != known.end()) {
        return std::nullopt;
    }
    return "scaling " + label + " is not one of the surveyed depth forms";
}

const std::vector<std::string> &canonical_form_order() {
    static const std::vector<std::string> order = {
        "O(n)",  "O(log(n))",        "O(log^x(n))", "O(1)",
        "O(sqrt(n) polylog(n))",     "O(n^2)",      "O(n polylog(n))",
        "O(n^3)", "O(n^2 polylog(n))", "O(n^3 log(n))", "O(n^5)",
    };
    return order;
}

int classify_initial(const ScalingDescriptor &s) {
    if (s.poly_degree.num < 0 || s.polylog_degree < 0) {
        throw std::invalid_argument("scaling exponents must be nonnegative");
    }
    long long k;
    if (s.polylog_degree == 0) {
        k = s.poly_degree.ceil();
    } else {
        k = s.poly_degree.floor() + 1; // polylog factors promote to the next class
    }
    if (k < 1) {
        k = 1;
    }
    if (k > 5) {
        throw UnsupportedError("scaling " + scaling_form_label(s) +
                               " exceeds the supported classes (QV-5)");
    }
    return static_cast<int>(k);
}

namespace {

bool is_boundary_scaling(const ScalingDescriptor &s) {
    return s.polylog_degree == 0 &&
           (s.poly_degree == Rational{1, 1} || s.poly_degree == Rational{2, 1} ||
            s.poly_degree == Rational{3, 1});
}

int percent_of(int count, int total) {
    return static_cast<int>(std::llround(100.0 * count / total));
}

} // namespace

int classify_adjusted(const ScalingDescriptor &s, EstimateType e) {
    const int initial = classify_initial(s);
    // gate-count estimates already overestimate depth: keep their class
    if (is_boundary_scaling(s) && e != EstimateType::GateCountOrOperations) {
        return initial + 1;
    }
    return initial;
}

SurveyTable tabulate(const std::vector<AlgorithmRecord> &records, TabulationMode mode) {
    if (records.empty()) {
        throw std::invalid_argument("tabulate: no records");
    }
    std::map<std::pair<int, std::string>, int> cells;
    for (const AlgorithmRecord &record : records) {
        const int k = mode == TabulationMode::Initial
                          ? classify_initial(record.scaling)
                          : classify_adjusted(record.scaling, record.estimate_type);
        ++cells[{k, scaling_form_label(record.scaling)}];
    }

    SurveyTable table;
    table.total = static_cast<int>(records.size());

    const std::vector<std::string> &order = canonical_form_order();
    auto form_rank = [&order](const std::string &form) {
        const auto it = std::find(order.begin(), order.end(), form);
        return it == order.end() ? order.size() : static_cast<std::size_t>(it - order.begin());
    };

    std::vector<std::pair<std::pair<int, std::string>, int>> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end(), [&](const auto &lhs, const auto &rhs) {
        if (lhs.first.first != rhs.first.first) {
            return lhs.first.first < rhs.first.first;
        }
        const auto lr = form_rank(lhs.first.second);
        const auto rr = form_rank(rhs.first.second);
        if (lr != rr) {
            return lr < rr;
        }
        return lhs.first.second < rhs.first.second;
    });

    for (const auto &[key, count] : sorted) {
        table.rows.push_back({key.first, key.second, count, percent_of(count, table.total)});
        table.class_totals[key.first] += count;
    }
    for (const auto &[k, count] : table.class_totals) {
        table.class_percent[k] = percent_of(count, table.total);
    }
    return table;
}

std::vector<AdjustmentRow> tabulate_adjustments(const std::vector<AlgorithmRecord> &records) {
    if (records.empty()) {
        throw std::invalid_argument("tabulate_adjustments: no records");
    }
    std::vector<AdjustmentRow> rows = {{"O(n)", 0, 0}, {"O(n^2)", 0, 0}, {"O(n^3)", 0, 0}};
    for (const AlgorithmRecord &record : records) {
        if (!is_boundary_scaling(record.scaling)) {
            continue;
        }
        const std::string form = scaling_form_label(record.scaling);
        for (AdjustmentRow &row : rows) {
            if (row.form == form) {
                const bool moved = classify_adjusted(record.scaling, record.estimate_type) !=
                                   classify_initial(record.scaling);
                (moved ? row.adjusted : row.kept) += 1;
            }
        }
    }
    return rows;
}

std::map<EstimateType, int> estimate_type_counts(const std::vector<AlgorithmRecord> &records) {
    std::map<EstimateType, int> counts;
    for (const AlgorithmRecord &record : records) {
        ++counts[record.estimate_type];
    }
    return counts;
}

std::map<Era, int> era_counts(const std::vector<AlgorithmRecord> &records) {
    std::map<Era, int> counts;
    for (const AlgorithmRecord &record : records) {
        ++counts[record.era];
    }
    return counts;
}

std::map<ApplicationArea, int> application_area_counts(
    const std::vector<AlgorithmRecord> &records) {
    std::map<ApplicationArea, int> counts;
    for (const AlgorithmRecord &record : records) {
        for (ApplicationArea area : record.application_areas) {
            ++counts[area];
        }
    }
    return counts;
}

namespace {

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream stream(text);
    while (std::getline(stream, field, sep)) {
        out.push_back(field);
    }
    if (!text.empty() && text.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::string strip(const std::string &text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

constexpr const char *kCsvHeader =
    "id,poly_degree,polylog_degree,estimate_type,era,application_areas";

} // namespace

std::vector<AlgorithmRecord> load_dataset(const std::string &csv_text) {
    std::vector<AlgorithmRecord> records;
    std::istringstream stream(csv_text);
    std::string line;
    int line_number = 0;
    bool header_seen = false;

    while (std::getline(stream, line)) {
        ++line_number;
        const std::string trimmed = strip(line);
        if (trimmed.empty() || trimmed[0] == '#') {
            continue;
        }
        if (!header_seen) {
            if (trimmed != kCsvHeader) {
                throw SchemaError("line " + std::to_string(line_number) +
                                  ": header must be '" + kCsvHeader + "'");
            }
            header_seen = true;
            continue;
        }

        const std::vector<std::string> fields = split(trimmed, ',');
        if (fields.size() != 6) {
            throw SchemaError("line " + std::to_string(line_number) + ": expected 6 fields, got " +
                              std::to_string(fields.size()));
        }
        try {
            AlgorithmRecord record;
            record.id = strip(fields[0]);
            if (record.id.empty()) {
                throw SchemaError("empty id");
            }
            record.scaling.poly_degree = Rational::parse(strip(fields[1]));
            record.scaling.polylog_degree = std::stoi(strip(fields[2]));
            if (record.scaling.polylog_degree < 0) {
                throw SchemaError("polylog_degree must be >= 0");
            }
            record.estimate_type = parse_estimate_type(strip(fields[3]));
            record.era = parse_era(strip(fields[4]));
            for (const std::string &area : split(strip(fields[5]), ';')) {
                record.application_areas.insert(parse_application_area(strip(area)));
            }
            if (record.application_areas.empty()) {
                throw SchemaError("application_areas must be nonempty");
            }
            records.push_back(std::move(record));
        } catch (const SchemaError &e) {
            throw SchemaError("line " + std::to_string(line_number) + ": " + e.what());
        } catch (const std::logic_error &e) {
            throw SchemaError("line " + std::to_string(line_number) + ": " + e.what());
        }
    }

    if (!header_seen) {
        throw SchemaError("dataset has no header row");
    }
    return records;
}

std::vector<AlgorithmRecord> builtin_records() { return load_dataset(builtin_dataset_csv()); }

namespace {

// Published aggregate counts the bundled dataset must reproduce exactly.
using CellMap = std::map<std::pair<int, std::string>, int>;

const CellMap &reference_initial_cells() {
    static const CellMap cells = {
        {{1, "O(n)"}, 16},  {{1, "O(log(n))"}, 8}, {{1, "O(log^x(n))"}, 6},
        {{1, "O(1)"}, 2},   {{1, "O(sqrt(n) polylog(n))"}, 1},
        {{2, "O(n^2)"}, 10}, {{2, "O(n polylog(n))"}, 2},
        {{3, "O(n^3)"}, 8}, {{3, "O(n^2 polylog(n))"}, 1},
        {{4, "O(n^3 log(n))"}, 2},
        {{5, "O(n^5)"}, 2},
    };
    return cells;
}

const CellMap &reference_final_cells() {
    static const CellMap cells = {
        {{1, "O(n)"}, 4},   {{1, "O(log(n))"}, 8}, {{1, "O(log^x(n))"}, 6},
        {{1, "O(1)"}, 2},   {{1, "O(sqrt(n) polylog(n))"}, 1},
        {{2, "O(n)"}, 12},  {{2, "O(n^2)"}, 4},    {{2, "O(n polylog(n))"}, 2},
        {{3, "O(n^2)"}, 6}, {{3, "O(n^3)"}, 4},    {{3, "O(n^2 polylog(n))"}, 1},
        {{4, "O(n^3)"}, 4}, {{4, "O(n^3 log(n))"}, 2},
        {{5, "O(n^5)"}, 2},
    };
    return cells;
}

void compare_cells(const char *table_name, const SurveyTable &table, const CellMap &expected,
                   std::vector<std::string> &mismatches) {
    CellMap actual;
    for (const SurveyTable::Row &row : table.rows) {
        actual[{row.k, row.form}] = row.count;
    }
    for (const auto &[key, count] : expected) {
        const auto it = actual.find(key);
        const int got = it == actual.end() ? 0 : it->second;
        if (got != count) {
            mismatches.push_back(std::string(table_name) + " QV-" + std::to_string(key.first) +
                                 " " + key.second + ": expected " + std::to_string(count) +
                                 ", got " + std::to_string(got));
        }
    }
    for (const auto &[key, count] : actual) {
        if (!expected.contains(key) && count != 0) {
            mismatches.push_back(std::string(table_name) + " QV-" + std::to_string(key.first) +
                                 " " + key.second + ": unexpected count " +
                                 std::to_string(count));
        }
    }
}

} // namespace

std::vector<std::string> check_reference_tables(const std::vector<AlgorithmRecord> &records) {
    std::vector<std::string> mismatches;

    compare_cells("initial table", tabulate(records, TabulationMode::Initial),
                  reference_initial_cells(), mismatches);
    compare_cells("final table", tabulate(records, TabulationMode::Adjusted),
                  reference_final_cells(), mismatches);

    const std::vector<AdjustmentRow> adjustments = tabulate_adjustments(records);
    const std::vector<AdjustmentRow> expected_adjustments = {
        {"O(n)", 12, 4}, {"O(n^2)", 6, 4}, {"O(n^3)", 4, 4}};
    for (std::size_t i = 0; i < expected_adjustments.size(); ++i) {
        if (adjustments[i].adjusted != expected_adjustments[i].adjusted ||
            adjustments[i].kept != expected_adjustments[i].kept) {
            mismatches.push_back(
                "adjustment table " + expected_adjustments[i].form + ": expected (" +
                std::to_string(expected_adjustments[i].adjusted) + ", " +
                std::to_string(expected_adjustments[i].kept) + "), got (" +
                std::to_string(adjustments[i].adjusted) + ", " +
                std::to_string(adjustments[i].kept) + ")");
        }
    }

    const std::map<EstimateType, int> expected_estimates = {
        {EstimateType::GateDepth, 14},
        {EstimateType::GateCountOrOperations, 19},
        {EstimateType::RuntimeOrTimeComplexity, 25},
    };
    const auto estimates = estimate_type_counts(records);
    for (const auto &[type, count] : expected_estimates) {
        const auto it = estimates.find(type);
        const int got = it == estimates.end() ? 0 : it->second;
        if (got != count) {
            mismatches.push_back("estimate-type marginal " + to_string(type) + ": expected " +
                                 std::to_string(count) + ", got " + std::to_string(got));
        }
    }

    const std::map<ApplicationArea, int> expected_areas = {
        {ApplicationArea::MachineLearning, 24},
        {ApplicationArea::Optimization, 14},
        {ApplicationArea::ManyBodyPhysicsChemistry, 16},
        {ApplicationArea::QuantumDataHiding, 6},
        {ApplicationArea::NumericalSolvers, 3},
        {ApplicationArea::Other, 2},
    };
    const auto areas = application_area_counts(records);
    for (const auto &[area, count] : expected_areas) {
        const auto it = areas.find(area);
        const int got = it == areas.end() ? 0 : it->second;
        if (got != count) {
            mismatches.push_back("application-area marginal " + to_string(area) + ": expected " +
                                 std::to_string(count) + ", got " + std::to_string(got));
        }
    }

    const std::map<Era, int> expected_eras = {{Era::NISQ, 27}, {Era::FT, 31}};
    const auto eras = era_counts(records);
    for (const auto &[era, count] : expected_eras) {
        const auto it = eras.find(era);
        const int got = it == eras.end() ? 0 : it->second;
        if (got != count) {
            mismatches.push_back("era marginal " + to_string(era) + ": expected " +
                                 std::to_string(count) + ", got " + std::to_string(got));
        }
    }

    return mismatches;
}

ScalingDescriptor parse_scaling_expression(const std::string &text) {
    const std::string trimmed = strip(text);
    if (trimmed.empty()) {
        throw SchemaError("empty scaling expression");
    }

    ScalingDescriptor descriptor;
    for (const std::string &raw_factor : split(trimmed, '*')) {
        std::string factor = strip(raw_factor);
        if (factor.empty()) {
            throw SchemaError("empty factor in scaling expression '" + text + "'");
        }
        // drop a trailing "(n)" argument: log(n), polylog(n), log^2(n)
        if (factor.size() > 3 && factor.ends_with("(n)") && factor.rfind("sqrt", 0) != 0) {
            factor = factor.substr(0, factor.size() - 3);
        }

        if (factor == "1") {
            continue;
        }
        if (factor == "n") {
            descriptor.poly_degree = descriptor.poly_degree + Rational{1, 1};
        } else if (factor.rfind("n^", 0) == 0) {
            descriptor.poly_degree = descriptor.poly_degree + Rational::parse(factor.substr(2));
        } else if (factor == "sqrt(n)") {
            descriptor.poly_degree = descriptor.poly_degree + Rational{1, 2};
        } else if (factor == "log") {
            descriptor.polylog_degree += 1;
        } else if (factor.rfind("log^", 0) == 0) {
            try {
                descriptor.polylog_degree += std::stoi(factor.substr(4));
            } catch (const std::logic_error &) {
                throw SchemaError("cannot parse log power in '" + factor + "'");
            }
        } else if (factor == "polylog") {
            descriptor.polylog_degree += 2; // unspecified power; any q >= 1 classifies alike
        } else {
            throw SchemaError("cannot parse scaling factor '" + factor + "'");
        }
    }
    return descriptor;
}

} // namespace volbench
