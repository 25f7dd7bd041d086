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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "volbench/errors.hpp"
#include "volbench/seed_stream.hpp"
#include "volbench/survey.hpp"

using namespace volbench;

namespace {

ScalingDescriptor scaling(long long num, long long den, int q) {
    ScalingDescriptor s;
    s.poly_degree = Rational{num, den};
    s.polylog_degree = q;
    return s;
}

AlgorithmRecord record(ScalingDescriptor s, EstimateType e) {
    AlgorithmRecord r;
    r.id = "t";
    r.scaling = s;
    r.estimate_type = e;
    r.era = Era::NISQ;
    r.application_areas = {ApplicationArea::Other};
    return r;
}

int table_cell(const SurveyTable &table, int k, const std::string &form) {
    for (const auto &row : table.rows) {
        if (row.k == k && row.form == form) {
            return row.count;
        }
    }
    return 0;
}

} // namespace

TEST_SUITE("survey") {

    TEST_CASE("rationals parse and reduce") {
        CHECK(Rational::parse("1/2") == Rational{1, 2});
        CHECK(Rational::parse("2/4") == Rational{1, 2});
        CHECK(Rational::parse("3") == Rational{3, 1});
        CHECK(Rational::parse("0.5") == Rational{1, 2});
        CHECK(Rational::parse("1.25") == Rational{5, 4});
        CHECK_THROWS_AS(Rational::parse("x"), SchemaError);
        CHECK(Rational{7, 2}.floor() == 3);
        CHECK(Rational{7, 2}.ceil() == 4);
    }

    TEST_CASE("initial classification follows the enumerated mapping") {
        // all eleven surveyed forms
        CHECK(classify_initial(scaling(0, 1, 0)) == 1); // O(1)
        CHECK(classify_initial(scaling(0, 1, 1)) == 1); // O(log n)
        CHECK(classify_initial(scaling(0, 1, 2)) == 1); // O(log^x n)
        CHECK(classify_initial(scaling(1, 2, 2)) == 1); // O(sqrt(n) polylog)
        CHECK(classify_initial(scaling(1, 1, 0)) == 1); // O(n)
        CHECK(classify_initial(scaling(1, 1, 2)) == 2); // O(n polylog)
        CHECK(classify_initial(scaling(2, 1, 0)) == 2); // O(n^2)
        CHECK(classify_initial(scaling(2, 1, 2)) == 3); // O(n^2 polylog)
        CHECK(classify_initial(scaling(3, 1, 0)) == 3); // O(n^3)
        CHECK(classify_initial(scaling(3, 1, 1)) == 4); // O(n^3 log n)
        CHECK(classify_initial(scaling(5, 1, 0)) == 5); // O(n^5)
    }

    TEST_CASE("scalings beyond class five are unsupported") {
        CHECK_THROWS_AS(classify_initial(scaling(6, 1, 0)), UnsupportedError);
        CHECK_THROWS_AS(classify_initial(scaling(5, 1, 1)), UnsupportedError);
    }

    TEST_CASE("adjustment promotes boundary scalings except gate counts") {
        CHECK(classify_adjusted(scaling(1, 1, 0), EstimateType::GateDepth) == 2);
        CHECK(classify_adjusted(scaling(2, 1, 0), EstimateType::GateCountOrOperations) == 2);
        CHECK(classify_adjusted(scaling(0, 1, 1), EstimateType::GateDepth) == 1);
        CHECK(classify_adjusted(scaling(0, 1, 1), EstimateType::RuntimeOrTimeComplexity) == 1);
        CHECK(classify_adjusted(scaling(3, 1, 0), EstimateType::RuntimeOrTimeComplexity) == 4);
        CHECK(classify_adjusted(scaling(2, 1, 0), EstimateType::GateDepth) == 3);
    }

    TEST_CASE("adjustment laws hold on random inputs") {
        Rng rng(SeedSpec{500, {}});
        int checked = 0;
        for (int i = 0; i < 10000; ++i) {
            ScalingDescriptor s;
            s.poly_degree =
                Rational{static_cast<long long>(rng.uniform_int(12)),
                         static_cast<long long>(1 + rng.uniform_int(4))};
            s.polylog_degree = static_cast<int>(rng.uniform_int(4));
            const auto type = static_cast<EstimateType>(rng.uniform_int(3));

            int initial;
            try {
                initial = classify_initial(s);
            } catch (const UnsupportedError &) {
                continue; // class would exceed 5
            }
            ++checked;
            const int adjusted = classify_adjusted(s, type);
            CHECK(adjusted >= initial); // never lowers
            if (type == EstimateType::GateCountOrOperations) {
                CHECK(adjusted == initial); // gate counts are fixed points
            }
            const bool boundary = s.polylog_degree == 0 &&
                                  (s.poly_degree == Rational{1, 1} ||
                                   s.poly_degree == Rational{2, 1} ||
                                   s.poly_degree == Rational{3, 1});
            if (!boundary) {
                CHECK(adjusted == initial); // non-boundary scalings are fixed points
            }
        }
        CHECK(checked > 5000);
    }

    TEST_CASE("non-surveyed scalings warn but classify") {
        const ScalingDescriptor s = scaling(7, 2, 0); // n^3.5
        CHECK(scaling_form_warning(s).has_value());
        CHECK(classify_initial(s) == 4);
        CHECK_FALSE(scaling_form_warning(scaling(2, 1, 0)).has_value());
    }

    TEST_CASE("single-record table") {
        const SurveyTable table =
            tabulate({record(scaling(0, 1, 0), EstimateType::GateDepth)},
                     TabulationMode::Initial);
        CHECK(table.total == 1);
        CHECK(table_cell(table, 1, "O(1)") == 1);
        CHECK(table.rows[0].percent == 100);
    }

    TEST_CASE("bundled dataset reproduces the published tables") {
        const std::vector<AlgorithmRecord> records = builtin_records();
        REQUIRE(records.size() == 58);

        const std::vector<std::string> mismatches = check_reference_tables(records);
        for (const std::string &m : mismatches) {
            FAIL_CHECK(m);
        }
        CHECK(mismatches.empty());

        const SurveyTable initial = tabulate(records, TabulationMode::Initial);
        CHECK(initial.class_totals.at(1) == 33);
        CHECK(initial.class_totals.at(2) == 12);
        CHECK(initial.class_totals.at(3) == 9);
        CHECK(initial.class_totals.at(4) == 2);
        CHECK(initial.class_totals.at(5) == 2);
        CHECK(initial.class_percent.at(1) == 57);
        CHECK(table_cell(initial, 1, "O(n)") == 16);
        // percent column matches the published style: 16/58 -> 28%
        for (const auto &row : initial.rows) {
            if (row.k == 1 && row.form == "O(n)") {
                CHECK(row.percent == 28);
            }
        }

        const SurveyTable final_table = tabulate(records, TabulationMode::Adjusted);
        CHECK(final_table.class_totals.at(1) == 21);
        CHECK(final_table.class_totals.at(2) == 18);
        CHECK(final_table.class_totals.at(3) == 11);
        CHECK(final_table.class_totals.at(4) == 6);
        CHECK(final_table.class_totals.at(5) == 2);
        CHECK(final_table.class_percent.at(1) == 36);
    }

    TEST_CASE("adjustment tabulation on tiny datasets") {
        const auto gate_count_row =
            tabulate_adjustments({record(scaling(1, 1, 0), EstimateType::GateCountOrOperations)});
        CHECK(gate_count_row[0].form == "O(n)");
        CHECK(gate_count_row[0].adjusted == 0);
        CHECK(gate_count_row[0].kept == 1);

        const auto runtime_row =
            tabulate_adjustments({record(scaling(3, 1, 0), EstimateType::RuntimeOrTimeComplexity)});
        CHECK(runtime_row[2].form == "O(n^3)");
        CHECK(runtime_row[2].adjusted == 1);
        CHECK(runtime_row[2].kept == 0);
    }

    TEST_CASE("dataset loader rejects bad input with row numbers") {
        CHECK_THROWS_AS(load_dataset("id,wrong,header\n"), SchemaError);
        const std::string header =
            "id,poly_degree,polylog_degree,estimate_type,era,application_areas\n";
        CHECK_THROWS_AS(load_dataset(header + "a,1,0,bad-type,NISQ,other\n"), SchemaError);
        CHECK_THROWS_AS(load_dataset(header + "a,1,0,gate-depth,MAYBE,other\n"), SchemaError);
        CHECK_THROWS_AS(load_dataset(header + "a,1,0,gate-depth,NISQ,nowhere\n"), SchemaError);
        CHECK_THROWS_AS(load_dataset(header + "a,1,0,gate-depth,NISQ\n"), SchemaError);
        try {
            load_dataset(header + "a,1,0,gate-depth,NISQ,other\nb,x,0,gate-depth,FT,other\n");
            FAIL("expected a schema error");
        } catch (const SchemaError &e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }

    TEST_CASE("bundled CSV matches the data file") {
        std::ifstream file(std::string(VOLBENCH_DATA_DIR) + "/algorithms.csv");
        REQUIRE(file.good());
        std::stringstream content;
        content << file.rdbuf();
        CHECK(content.str() == builtin_dataset_csv());
    }

    TEST_CASE("scaling expressions parse") {
        CHECK(parse_scaling_expression("n^2").poly_degree == Rational{2, 1});
        CHECK(parse_scaling_expression("n^2").polylog_degree == 0);
        const ScalingDescriptor cubic_log = parse_scaling_expression("n^3*log");
        CHECK(cubic_log.poly_degree == Rational{3, 1});
        CHECK(cubic_log.polylog_degree == 1);
        const ScalingDescriptor one = parse_scaling_expression("1");
        CHECK(one.poly_degree == Rational{0, 1});
        CHECK(one.polylog_degree == 0);
        const ScalingDescriptor root = parse_scaling_expression("sqrt(n)*polylog");
        CHECK(root.poly_degree == Rational{1, 2});
        CHECK(root.polylog_degree >= 1);
        CHECK(parse_scaling_expression("polylog").polylog_degree >= 1);
        CHECK(parse_scaling_expression("n^1/2").poly_degree == Rational{1, 2});
        CHECK(parse_scaling_expression("log^3(n)").polylog_degree == 3);
        CHECK(parse_scaling_expression("n*log(n)").poly_degree == Rational{1, 1});
        CHECK_THROWS_AS(parse_scaling_expression("garbage^^"), SchemaError);
        CHECK_THROWS_AS(parse_scaling_expression(""), SchemaError);
    }
}
