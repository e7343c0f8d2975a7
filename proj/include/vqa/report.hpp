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
/**
 * @file
 * Machine-readable run reports.
 *
 * A solve report is one JSON object:
 *
 *     { "version", "config", "num_qubits", "result", "bench"?, "maxcut"?, "timing" }
 *
 * Everything except "timing" is a pure function of the configuration, so two
 * runs with the same config agree byte for byte once that key is removed.
 */
#pragma once

#include "vqa/guiding.hpp"
#include "vqa/optimize.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace vqa {

inline constexpr std::string_view kVersion = "0.1.0";

enum class ProblemKind { Polynomial, Graph };

std::string_view to_string(ProblemKind kind);

struct RunConfig {
    ProblemKind problem_kind = ProblemKind::Polynomial;
    std::filesystem::path problem_path;
    unsigned p = 1;
    GuidingSpec guiding = GuidingSpec::mean();
    OptimizerConfig optimizer;

    friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

/// Comparison against the brute-force optimum. f_algo is the exact mean at best_theta.
struct BenchReport {
    std::string instance_id;
    double f_star = 0.0;
    double f_algo = 0.0;
    /// f_algo / f_star; absent when f_star == 0, in which case only `gap` is meaningful.
    std::optional<double> ratio;
    double gap = 0.0;
    unsigned p = 1;
    GuidingSpec spec = GuidingSpec::mean();

    friend bool operator==(const BenchReport &, const BenchReport &) = default;
};

/// Cut sizes for MAX-CUT runs, in maximization form.
struct CutSummary {
    double best_cut = 0.0;
    std::optional<double> max_cut;
    std::optional<double> mean_cut;

    friend bool operator==(const CutSummary &, const CutSummary &) = default;
};

struct SolveReport {
    std::string version{kVersion};
    RunConfig config;
    unsigned num_qubits = 0;
    VqaResult result;
    std::optional<BenchReport> bench;
    std::optional<CutSummary> maxcut;
    double wall_seconds = 0.0;

    friend bool operator==(const SolveReport &, const SolveReport &) = default;
};

void to_json(nlohmann::json &j, const GuidingSpec &spec);
void from_json(const nlohmann::json &j, GuidingSpec &spec);
void to_json(nlohmann::json &j, const OptimizerConfig &cfg);
void from_json(const nlohmann::json &j, OptimizerConfig &cfg);
void to_json(nlohmann::json &j, const RunConfig &cfg);
void from_json(const nlohmann::json &j, RunConfig &cfg);
void to_json(nlohmann::json &j, const BenchReport &bench);
void from_json(const nlohmann::json &j, BenchReport &bench);
void to_json(nlohmann::json &j, const SolveReport &report);
void from_json(const nlohmann::json &j, SolveReport &report);

/// Serializes with 2-space indentation and a trailing newline.
std::string emit(const SolveReport &report);
SolveReport parse_report(std::string_view text);

/// The report with the "timing" key removed.
nlohmann::json report_body(const nlohmann::json &report);

} // namespace vqa
