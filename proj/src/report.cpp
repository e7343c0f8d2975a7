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
#include "vqa/report.hpp"

#include "vqa/error.hpp"
#include "vqa/statevector.hpp"

#include <fmt/format.h>

namespace vqa {

using nlohmann::json;

std::string_view to_string(ProblemKind kind) { return kind == ProblemKind::Graph ? "graph" : "polynomial"; }

namespace {

ProblemKind parse_problem_kind(std::string_view name) {
    if (name == "graph") {
        return ProblemKind::Graph;
    }
    if (name == "polynomial") {
        return ProblemKind::Polynomial;
    }
    throw InvalidArgument(fmt::format("unknown problem kind '{}'", name));
}

template <class T> json optional_to_json(const std::optional<T> &v) { return v ? json(*v) : json(nullptr); }

template <class T> std::optional<T> optional_from_json(const json &j, const char *key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

} // namespace

void to_json(json &j, const GuidingSpec &spec) {
    j = json{{"kind", to_string(spec.kind())}};
    if (spec.kind() == GuidingKind::Gibbs) {
        j["eta"] = spec.eta();
    } else if (spec.kind() == GuidingKind::CVaR) {
        j["alpha"] = spec.alpha();
    }
}

void from_json(const json &j, GuidingSpec &spec) {
    switch (parse_guiding_kind(j.at("kind").get<std::string>())) {
    case GuidingKind::Mean:
        spec = GuidingSpec::mean();
        break;
    case GuidingKind::Gibbs:
        spec = GuidingSpec::gibbs(j.at("eta").get<double>());
        break;
    case GuidingKind::CVaR:
        spec = GuidingSpec::cvar(j.at("alpha").get<double>());
        break;
    case GuidingKind::Min:
        spec = GuidingSpec::min();
        break;
    }
}

void to_json(json &j, const OptimizerConfig &cfg) {
    j = json{{"method", to_string(cfg.method)},
             {"restarts", cfg.restarts},
             {"max_iters", cfg.max_iters},
             {"tol", cfg.tol},
             {"shots", cfg.shots},
             {"seed", cfg.seed},
             {"grid_points", cfg.grid_points},
             {"initial_step", cfg.initial_step},
             {"fd_step", cfg.fd_step},
             {"learning_rate", cfg.learning_rate}};
}

void from_json(const json &j, OptimizerConfig &cfg) {
    cfg.method = parse_optimizer_method(j.at("method").get<std::string>());
    j.at("restarts").get_to(cfg.restarts);
    j.at("max_iters").get_to(cfg.max_iters);
    j.at("tol").get_to(cfg.tol);
    j.at("shots").get_to(cfg.shots);
    j.at("seed").get_to(cfg.seed);
    j.at("grid_points").get_to(cfg.grid_points);
    j.at("initial_step").get_to(cfg.initial_step);
    j.at("fd_step").get_to(cfg.fd_step);
    j.at("learning_rate").get_to(cfg.learning_rate);
}

void to_json(json &j, const RunConfig &cfg) {
    j = json{{"problem", {{"kind", to_string(cfg.problem_kind)}, {"path", cfg.problem_path.generic_string()}}},
             {"p", cfg.p},
             {"guiding", cfg.guiding},
             {"optimizer", cfg.optimizer}};
}

void from_json(const json &j, RunConfig &cfg) {
    const json &problem = j.at("problem");
    cfg.problem_kind = parse_problem_kind(problem.at("kind").get<std::string>());
    cfg.problem_path = problem.at("path").get<std::string>();
    j.at("p").get_to(cfg.p);
    from_json(j.at("guiding"), cfg.guiding);
    cfg.optimizer = j.at("optimizer").get<OptimizerConfig>();
}

void to_json(json &j, const BenchReport &bench) {
    j = json{{"instance_id", bench.instance_id},
             {"f_star", bench.f_star},
             {"f_algo", bench.f_algo},
             {"ratio", optional_to_json(bench.ratio)},
             {"gap", bench.gap},
             {"p", bench.p},
             {"spec", bench.spec}};
}

void from_json(const json &j, BenchReport &bench) {
    j.at("instance_id").get_to(bench.instance_id);
    j.at("f_star").get_to(bench.f_star);
    j.at("f_algo").get_to(bench.f_algo);
    bench.ratio = optional_from_json<double>(j, "ratio");
    j.at("gap").get_to(bench.gap);
    j.at("p").get_to(bench.p);
    from_json(j.at("spec"), bench.spec);
}

void to_json(json &j, const SolveReport &report) {
    const VqaResult &r = report.result;
    json history = json::array();
    for (const HistoryEntry &h : r.history) {
        history.push_back({{"restart", h.restart}, {"theta", h.theta}, {"value", h.value}});
    }
    j = json{{"version", report.version},
             {"config", report.config},
             {"num_qubits", report.num_qubits},
             {"result",
              {{"best_theta", r.best_theta},
               {"best_bitstring", bitstring(r.best_bitstring, report.num_qubits)},
               {"best_value", r.best_value},
               {"guiding_value_at_best_theta", r.guiding_value_at_best_theta},
               {"success_probability", optional_to_json(r.success_probability)},
               {"mean_at_best_theta", optional_to_json(r.mean_at_best_theta)},
               {"evaluations", r.evaluations},
               {"total_circuit_executions", r.total_circuit_executions},
               {"history", std::move(history)}}},
             {"bench", report.bench ? json(*report.bench) : json(nullptr)},
             {"maxcut", nullptr},
             {"timing", {{"wall_seconds", report.wall_seconds}}}};
    if (report.maxcut) {
        j["maxcut"] = {{"best_cut", report.maxcut->best_cut},
                       {"max_cut", optional_to_json(report.maxcut->max_cut)},
                       {"mean_cut", optional_to_json(report.maxcut->mean_cut)}};
    }
}

void from_json(const json &j, SolveReport &report) {
    j.at("version").get_to(report.version);
    report.config = j.at("config").get<RunConfig>();
    j.at("num_qubits").get_to(report.num_qubits);
    const json &r = j.at("result");
    VqaResult &out = report.result;
    r.at("best_theta").get_to(out.best_theta);
    out.best_bitstring = parse_bitstring(r.at("best_bitstring").get<std::string>());
    r.at("best_value").get_to(out.best_value);
    r.at("guiding_value_at_best_theta").get_to(out.guiding_value_at_best_theta);
    out.success_probability = optional_from_json<double>(r, "success_probability");
    out.mean_at_best_theta = optional_from_json<double>(r, "mean_at_best_theta");
    r.at("evaluations").get_to(out.evaluations);
    r.at("total_circuit_executions").get_to(out.total_circuit_executions);
    out.history.clear();
    for (const json &h : r.at("history")) {
        out.history.push_back(
            {h.at("restart").get<unsigned>(), h.at("theta").get<std::vector<double>>(), h.at("value").get<double>()});
    }
    report.bench = optional_from_json<BenchReport>(j, "bench");
    report.maxcut.reset();
    if (j.contains("maxcut") && !j.at("maxcut").is_null()) {
        const json &m = j.at("maxcut");
        report.maxcut = CutSummary{m.at("best_cut").get<double>(), optional_from_json<double>(m, "max_cut"),
                                   optional_from_json<double>(m, "mean_cut")};
    }
    j.at("timing").at("wall_seconds").get_to(report.wall_seconds);
}

std::string emit(const SolveReport &report) { return json(report).dump(2) + "\n"; }

SolveReport parse_report(std::string_view text) {
    try {
        return json::parse(text).get<SolveReport>();
    } catch (const json::exception &e) {
        throw InvalidArgument(fmt::format("malformed report: {}", e.what()));
    }
}

json report_body(const json &report) {
    json body = report;
    body.erase("timing");
    return body;
}

} // namespace vqa
