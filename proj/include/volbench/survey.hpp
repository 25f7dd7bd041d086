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
 * Depth-scaling taxonomy for the algorithm survey.
 *
 * A depth scaling n^p log^q(n) maps to volumetric class
 *   k = clamp(ceil(p), 1, 5)    when q = 0,
 *   k = floor(p) + 1            when q > 0 (polylog factors promote),
 * and the overhead adjustment moves pure powers p in {1,2,3} one class up
 * unless the estimate derives from total gate counts, which already
 * overestimate depth.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace volbench {

/// Exact nonnegative rational; keeps exponents like 1/2 exact where a double
/// ceil/floor would be fragile.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    [[nodiscard]] long long floor() const;
    [[nodiscard]] long long ceil() const;
    [[nodiscard]] bool is_integer() const { return den == 1; }
    [[nodiscard]] double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    [[nodiscard]] std::string to_string() const;

    bool operator==(const Rational &other) const = default;

    Rational operator+(const Rational &other) const;

    /// Parses "a/b", an integer, or a decimal such as "0.5".
    static Rational parse(const std::string &text);
};

/// Circuit-depth scaling d(n) ~ n^poly_degree * log^polylog_degree(n).
struct ScalingDescriptor {
    Rational poly_degree;   // p >= 0
    int polylog_degree = 0; // q >= 0; q > 0 means a polylog factor is present
};

enum class EstimateType { GateDepth, GateCountOrOperations, RuntimeOrTimeComplexity };
enum class Era { NISQ, FT };
enum class ApplicationArea {
    MachineLearning,
    Optimization,
    ManyBodyPhysicsChemistry,
    QuantumDataHiding,
    NumericalSolvers,
    Other,
};

std::string to_string(EstimateType e);
std::string to_string(Era e);
std::string to_string(ApplicationArea a);
EstimateType parse_estimate_type(const std::string &text);
Era parse_era(const std::string &text);
ApplicationArea parse_application_area(const std::string &text);

struct AlgorithmRecord {
    std::string id;
    ScalingDescriptor scaling;
    EstimateType estimate_type = EstimateType::GateDepth;
    Era era = Era::NISQ;
    std::set<ApplicationArea> application_areas; // nonempty
};

/// Canonical label for the scaling ("O(n)", "O(log(n))", ...).  Scalings
/// outside the eleven surveyed forms get a generic label and a warning from
/// scaling_form_warning().
std::string scaling_form_label(const ScalingDescriptor &s);

/// Nonempty when the scaling is not one of the surveyed forms.
std::optional<std::string> scaling_form_warning(const ScalingDescriptor &s);

/// Fixed presentation order of the surveyed forms.
const std::vector<std::string> &canonical_form_order();

/// Initial class assignment.  Throws UnsupportedError when the class would
/// exceed 5.
int classify_initial(const ScalingDescriptor &s);

/// Overhead-adjusted class: pure powers p in {1,2,3} move up one class
/// unless the estimate is a gate count.  Never lower than the initial class.
int classify_adjusted(const ScalingDescriptor &s, EstimateType e);

enum class TabulationMode { Initial, Adjusted };

struct SurveyTable {
    struct Row {
        int k = 0;
        std::string form;
        int count = 0;
        int percent = 0; // nearest integer percent of the total
    };
    int total = 0;
    std::vector<Row> rows;              // ordered by class then canonical form
    std::map<int, int> class_totals;    // class -> count
    std::map<int, int> class_percent;
};

SurveyTable tabulate(const std::vector<AlgorithmRecord> &records, TabulationMode mode);

/// Per boundary scaling (O(n), O(n^2), O(n^3)): how many records moved up a
/// class and how many kept their initial class.
struct AdjustmentRow {
    std::string form;
    int adjusted = 0;
    int kept = 0;
};

std::vector<AdjustmentRow> tabulate_adjustments(const std::vector<AlgorithmRecord> &records);

std::map<EstimateType, int> estimate_type_counts(const std::vector<AlgorithmRecord> &records);
std::map<Era, int> era_counts(const std::vector<AlgorithmRecord> &records);
std::map<ApplicationArea, int> application_area_counts(
    const std::vector<AlgorithmRecord> &records);

/// Parses the survey CSV (header: id,poly_degree,polylog_degree,
/// estimate_type,era,application_areas).  Lines starting with '#' are
/// comments.  Throws SchemaError with the offending row number.
std::vector<AlgorithmRecord> load_dataset(const std::string &csv_text);

/// The bundled 58-record dataset (synthesized to reproduce the published
/// aggregate tables; see the CSV header comment).
const std::string &builtin_dataset_csv();
std::vector<AlgorithmRecord> builtin_records();

/// Compares all tables and marginals computed from `records` against the
/// published reference counts.  Returns a list of mismatch descriptions;
/// empty means exact reproduction.
std::vector<std::string> check_reference_tables(const std::vector<AlgorithmRecord> &records);

/// Parses scaling expressions such as "n^2", "n^3*log", "sqrt(n)*polylog",
/// "polylog", "1".  Throws SchemaError on unparseable input.
ScalingDescriptor parse_scaling_expression(const std::string &text);

} // namespace volbench
