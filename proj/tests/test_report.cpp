// Copyright 2026 The vqa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "vqa/error.hpp"
#include "vqa/report.hpp"

#include <catch_amalgamated.hpp>

using namespace vqa;

namespace {

SolveReport sample_report() {
    SolveReport r;
    r.config.problem_kind = ProblemKind::Graph;
    r.config.problem_path = "data/g.graph";
    r.config.p = 2;
    r.config.guiding = GuidingSpec::cvar(0.1);
    r.config.optimizer.method = OptimizerMethod::GridSearch;
    r.config.optimizer.shots = 512;
    r.config.optimizer.seed = 0xfeedfacecafebeefULL;
    r.num_qubits = 5;
    r.result.best_theta = {0.1, 1.0 / 3.0, 2.718281828459045, 1e-300};
    r.result.best_bitstring = 0b10110;
    r.result.best_value = -3.0;
    r.result.guiding_value_at_best_theta = -2.9999999999999996;
    r.result.success_probability = 0.123456789012345678;
    r.result.history = {{0, {0.1, 0.2, 0.3, 0.4}, -1.25}, {3, {5.0, 6.0, 7.0, 8.0}, -2.5}};
    r.result.evaluations = 2;
    r.result.total_circuit_executions = 4;
    r.bench = BenchReport{"g", -4.0, -2.5, 0.625, 1.5, 2, GuidingSpec::cvar(0.1)};
    r.maxcut = CutSummary{3.0, 4.0, std::nullopt};
    r.wall_seconds = 0.25;
    return r;
}

} // namespace

TEST_CASE("reports round-trip through JSON", "[report]") {
    const SolveReport r = sample_report();
    CHECK(parse_report(emit(r)) == r);

    SolveReport plain;
    plain.num_qubits = 1;
    plain.result.best_theta = {0.0, 0.0};
    plain.config.guiding = GuidingSpec::gibbs(0.5);
    CHECK(parse_report(emit(plain)) == plain);
}

TEST_CASE("report layout", "[report]") {
    const nlohmann::json j = nlohmann::json::parse(emit(sample_report()));
    CHECK(j.at("result").at("best_bitstring") == "10110");
    CHECK(j.at("version") == std::string(kVersion));
    CHECK(j.at("config").at("guiding").at("alpha") == 0.1);
    CHECK(j.at("result").at("mean_at_best_theta").is_null());
    CHECK(j.at("timing").at("wall_seconds") == 0.25);
    CHECK_FALSE(report_body(j).contains("timing"));
    CHECK(report_body(j).contains("result"));
}

TEST_CASE("malformed reports", "[report]") {
    CHECK_THROWS_AS(parse_report("{"), InvalidArgument);
    CHECK_THROWS_AS(parse_report("{}"), InvalidArgument);
    nlohmann::json j = nlohmann::json::parse(emit(sample_report()));
    j["config"]["guiding"]["kind"] = "median";
    CHECK_THROWS_AS(parse_report(j.dump()), InvalidArgument);
}
