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
#include "vqa/cli.hpp"

#include "vqa/error.hpp"
#include "vqa/hamiltonian.hpp"
#include "vqa/linalg.hpp"
#include "vqa/problems.hpp"
#include "vqa/qaoa.hpp"
#include "vqa/statevector.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <new>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

namespace vqa::cli {

using nlohmann::json;

PseudoBooleanPoly load_problem(const RunConfig &cfg) {
    if (cfg.problem_kind == ProblemKind::Graph) {
        return maxcut_objective(read_graph_file(cfg.problem_path));
    }
    return read_polynomial_file(cfg.problem_path);
}

SolveReport solve(const RunConfig &cfg) {
    const PseudoBooleanPoly f = load_problem(cfg);
    if (f.num_vars() > kMaxQubits) {
        throw SizeLimitError(fmt::format("problem has {} variables; the simulator is capped at {}", f.num_vars(),
                                         kMaxQubits));
    }
    const auto start = std::chrono::steady_clock::now();
    SolveReport report;
    report.config = cfg;
    report.num_qubits = f.num_vars();
    report.result = run_vqa(to_ising(f), f, cfg.p, cfg.guiding, cfg.optimizer);

    const VqaResult &r = report.result;
    std::optional<double> f_star;
    if (r.mean_at_best_theta) {
        f_star = brute_force_min(f).f_star;
        BenchReport bench;
        bench.instance_id = cfg.problem_path.stem().string();
        bench.f_star = *f_star;
        bench.f_algo = *r.mean_at_best_theta;
        if (*f_star != 0.0) {
            bench.ratio = approximation_ratio(bench.f_algo, *f_star);
        }
        bench.gap = bench.f_algo - *f_star;
        bench.p = cfg.p;
        bench.spec = cfg.guiding;
        report.bench = bench;
    }
    if (cfg.problem_kind == ProblemKind::Graph) {
        CutSummary cut;
        cut.best_cut = -r.best_value;
        if (f_star) {
            cut.max_cut = -*f_star;
        }
        if (r.mean_at_best_theta) {
            cut.mean_cut = -*r.mean_at_best_theta;
        }
        report.maxcut = cut;
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string landscape_csv(const LandscapeConfig &cfg) {
    const PseudoBooleanPoly f = load_problem(cfg.run);
    if (f.num_vars() > kMaxExactQubits) {
        throw SizeLimitError(
            fmt::format("landscapes are exact and capped at {} qubits, got {}", kMaxExactQubits, f.num_vars()));
    }
    std::optional<BasisIndex> target;
    if (cfg.target) {
        if (cfg.target->size() != f.num_vars()) {
            throw InvalidArgument(
                fmt::format("target '{}' must have {} bits", *cfg.target, f.num_vars()));
        }
        target = parse_bitstring(*cfg.target);
    }
    const unsigned p = cfg.run.p;
    const std::vector<std::vector<double>> grid = parameter_grid(p, cfg.points);
    const IsingPoly h = to_ising(f);
    const ObjectiveTable table(f);

    std::vector<std::string> rows(grid.size());
    const auto count = static_cast<std::int64_t>(grid.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            const auto k = static_cast<std::size_t>(i);
            const std::vector<double> probs =
                probabilities(apply_circuit(zero_state(f.num_vars()), synthesize(h, QaoaParams::from_flat(grid[k]))));
            const double g = evaluate_exact(cfg.run.guiding, probs, table);
            const double success = target ? probs[*target] : table.success_probability(probs);
            std::string row;
            for (double angle : grid[k]) {
                row += fmt::format("{},", angle);
            }
            rows[k] = row + fmt::format("{},{}\n", g, success);
        } catch (...) {
#pragma omp critical
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    std::string csv;
    for (unsigned k = 1; k <= p; ++k) {
        csv += fmt::format("gamma_{},", k);
    }
    for (unsigned k = 1; k <= p; ++k) {
        csv += fmt::format("beta_{},", k);
    }
    csv += "g,p_success\n";
    for (const std::string &row : rows) {
        csv += row;
    }
    return csv;
}

void write_atomically(const std::filesystem::path &path, const std::string &contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw InvalidArgument("cannot write " + tmp.string());
        }
        out << contents;
        out.flush();
        if (!out) {
            throw InvalidArgument("failed writing " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

namespace {

template <class Fn> int guarded(std::ostream &err, Fn &&fn) {
    try {
        return fn();
    } catch (const SizeLimitError &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kSizeLimit;
    } catch (const NumericalError &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kNumericalFailure;
    } catch (const std::bad_alloc &) {
        fmt::print(err, "error: out of memory\n");
        return kSizeLimit;
    } catch (const std::exception &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kConfigError;
    }
}

void deliver(const std::filesystem::path &out, const std::string &contents, std::ostream &stdout_) {
    if (out.empty()) {
        stdout_ << contents;
    } else {
        write_atomically(out, contents);
    }
}

} // namespace

int cmd_solve(const RunConfig &cfg, const std::filesystem::path &out, std::ostream &stdout_, std::ostream &stderr_) {
    return guarded(stderr_, [&] {
        deliver(out, emit(solve(cfg)), stdout_);
        return kSuccess;
    });
}

int cmd_landscape(const LandscapeConfig &cfg, const std::filesystem::path &out, std::ostream &stdout_,
                  std::ostream &stderr_) {
    return guarded(stderr_, [&] {
        deliver(out, landscape_csv(cfg), stdout_);
        return kSuccess;
    });
}

int cmd_bruteforce(const RunConfig &cfg, const std::filesystem::path &out, std::ostream &stdout_,
                   std::ostream &stderr_) {
    return guarded(stderr_, [&] {
        const PseudoBooleanPoly f = load_problem(cfg);
        const BruteForceResult r = brute_force_min(f);
        json argmin = json::array();
        for (BasisIndex x : r.argmin) {
            argmin.push_back(bitstring(x, f.num_vars()));
        }
        json doc{{"version", kVersion},
                 {"problem", {{"kind", to_string(cfg.problem_kind)}, {"path", cfg.problem_path.generic_string()}}},
                 {"num_qubits", f.num_vars()},
                 {"f_star", r.f_star},
                 {"argmin", std::move(argmin)}};
        if (cfg.problem_kind == ProblemKind::Graph) {
            doc["max_cut"] = -r.f_star;
        }
        deliver(out, doc.dump(2) + "\n", stdout_);
        return kSuccess;
    });
}

namespace {

constexpr double kVerifyTolerance = 1e-9;

/// Max-entry distance after aligning the global phase on V's largest entry.
double phase_aligned_error(const ComplexMatrix &u, const ComplexMatrix &v) {
    const auto ve = v.entries();
    const auto pivot = static_cast<std::size_t>(
        std::max_element(ve.begin(), ve.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); }) -
        ve.begin());
    Complex phase = u.entries()[pivot] / ve[pivot];
    phase /= std::abs(phase);
    return max_abs_diff(u, phase * v);
}

PseudoBooleanPoly random_polynomial(std::mt19937_64 &rng, unsigned n, unsigned max_degree) {
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_int_distribution<unsigned> degree(0, std::min(n, max_degree));
    std::uniform_int_distribution<unsigned> terms(1, 3 * n);
    PseudoBooleanPoly f(n);
    const unsigned count = terms(rng);
    for (unsigned t = 0; t < count; ++t) {
        std::vector<unsigned> vars(n);
        for (unsigned i = 0; i < n; ++i) {
            vars[i] = i + 1;
        }
        std::shuffle(vars.begin(), vars.end(), rng);
        vars.resize(degree(rng));
        f.add_term(vars, coeff(rng));
    }
    return f;
}

std::string polynomial_text(const PseudoBooleanPoly &f) {
    std::ostringstream out;
    write_polynomial(out, f);
    return out.str();
}

ComplexMatrix dense_ising(const IsingPoly &h) {
    const unsigned n = h.num_vars();
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix sum(dim, dim);
    for (const auto &[vars, c] : h.terms()) {
        std::vector<ComplexMatrix> factors(n, gates::i2());
        for (unsigned v : vars) {
            factors[v - 1] = gates::z();
        }
        sum = sum + Complex(c, 0.0) * tensor_product(factors);
    }
    return sum;
}

struct CheckTally {
    std::string name;
    double max_error = 0.0;
    unsigned instances = 0;
    bool failed = false;

    void record(double error, const json &instance, std::ostream &err) {
        ++instances;
        max_error = std::max(max_error, error);
        if (!(error <= kVerifyTolerance)) {
            failed = true;
            json line = instance;
            line["check"] = name;
            line["error"] = error;
            fmt::print(err, "FAILED {}\n", line.dump());
        }
    }
};

} // namespace

int cmd_verify(const VerifyConfig &cfg, std::ostream &stdout_, std::ostream &stderr_, const VerifyHooks &hooks) {
    if (cfg.trials < 1) {
        fmt::print(stderr_, "error: --trials must be at least 1\n");
        return kConfigError;
    }
    if (cfg.n_max < 2 || cfg.n_max > 8) {
        fmt::print(stderr_, "error: --n-max must lie in [2, 8]\n");
        return kConfigError;
    }
    const auto ladder = hooks.ladder ? hooks.ladder : exp_multi_z;
    return guarded(stderr_, [&] {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        std::uniform_int_distribution<unsigned> size(1, cfg.n_max);
        std::vector<CheckTally> checks{{"ladder"}, {"qubo"}, {"eigen"}, {"block"}};

        for (unsigned n = 2; n <= cfg.n_max; ++n) {
            std::vector<unsigned> qubits(n);
            for (unsigned i = 0; i < n; ++i) {
                qubits[i] = i + 1;
            }
            std::vector<double> parity(std::size_t{1} << n);
            for (std::size_t x = 0; x < parity.size(); ++x) {
                parity[x] = std::popcount(x) % 2 == 0 ? 1.0 : -1.0;
            }
            const DiagonalOperator zn(parity);
            for (unsigned t = 0; t < cfg.trials; ++t) {
                const double theta = angle(rng);
                const double err = max_abs_diff(dense_unitary(ladder(n, qubits, theta)), exp_diagonal(zn, theta));
                checks[0].record(err, {{"n", n}, {"t", theta}}, stderr_);
            }
        }

        for (unsigned t = 0; t < cfg.trials; ++t) {
            const PseudoBooleanPoly f = random_polynomial(rng, size(rng), 4);
            const IsingPoly h = to_ising(f);
            const unsigned n = f.num_vars();
            const std::size_t dim = std::size_t{1} << n;
            const json instance{{"polynomial", polynomial_text(f)}};

            double qubo = 0.0;
            for (BasisIndex x = 0; x < dim; ++x) {
                qubo = std::max(qubo, std::abs(evaluate(f, x) - evaluate(h, x)));
            }
            checks[1].record(qubo, instance, stderr_);

            const ComplexMatrix dense = dense_ising(h);
            double eigen = 0.0;
            for (BasisIndex x = 0; x < dim; ++x) {
                const double fx = evaluate(f, x);
                for (std::size_t r = 0; r < dim; ++r) {
                    const Complex expected = r == x ? Complex(fx, 0.0) : Complex(0.0, 0.0);
                    eigen = std::max(eigen, std::abs(dense(r, x) - expected));
                }
            }
            checks[2].record(eigen, instance, stderr_);

            const double gamma = angle(rng);
            const double beta = angle(rng) / 2.0;
            const Circuit c = synthesize(h, QaoaParams({gamma}, {beta}));
            std::vector<ComplexMatrix> mixer(n, gates::rx(2.0 * beta));
            std::vector<ComplexMatrix> hadamards(n, gates::h());
            const ComplexMatrix expected =
                tensor_product(mixer) * exp_diagonal(diagonal(h), gamma) * tensor_product(hadamards);
            json block = instance;
            block["gamma"] = gamma;
            block["beta"] = beta;
            checks[3].record(phase_aligned_error(dense_unitary(c), expected), block, stderr_);
        }

        bool ok = true;
        for (const CheckTally &c : checks) {
            fmt::print(stdout_, "{:<8} instances={:<4} max_error={:.3e} {}\n", c.name, c.instances, c.max_error,
                       c.failed ? "FAIL" : "ok");
            ok = ok && !c.failed;
        }
        return ok ? kSuccess : kVerifyFailed;
    });
}

namespace {

struct ProblemOptions {
    std::string polynomial;
    std::string graph;
    unsigned p = 1;
    std::string guiding = "mean";
    double eta = 1.0;
    double alpha = 0.25;
    std::string optimizer = "nelder-mead";
    OptimizerConfig opt;
    std::string out;
};

void add_problem_options(CLI::App *cmd, ProblemOptions &o) {
    auto *poly = cmd->add_option("--problem", o.polynomial, "Polynomial file");
    auto *graph = cmd->add_option("--graph", o.graph, "Graph file (MAX-CUT)");
    poly->excludes(graph);
    cmd->add_option("--out", o.out, "Output file (default: standard output)");
}

void add_run_options(CLI::App *cmd, ProblemOptions &o, bool optimizer) {
    cmd->add_option("--p", o.p, "QAOA depth")->capture_default_str();
    cmd->add_option("--guiding", o.guiding, "mean | gibbs | cvar | min")->capture_default_str();
    cmd->add_option("--eta", o.eta, "Gibbs inverse temperature")->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "CVaR tail fraction")->capture_default_str();
    if (!optimizer) {
        return;
    }
    cmd->add_option("--shots", o.opt.shots, "Shots per evaluation (0 = exact)")->capture_default_str();
    cmd->add_option("--seed", o.opt.seed, "Master seed")->capture_default_str();
    cmd->add_option("--optimizer", o.optimizer, "nelder-mead | grad | grid")->capture_default_str();
    cmd->add_option("--restarts", o.opt.restarts, "Restarts (grid: polished points)")->capture_default_str();
    cmd->add_option("--max-iters", o.opt.max_iters, "Iterations per restart")->capture_default_str();
    cmd->add_option("--tol", o.opt.tol, "Convergence tolerance")->capture_default_str();
    cmd->add_option("--grid-points", o.opt.grid_points, "Grid points per angle (grid optimizer)")
        ->capture_default_str();
}

RunConfig to_run_config(const ProblemOptions &o) {
    RunConfig cfg;
    if (!o.graph.empty()) {
        cfg.problem_kind = ProblemKind::Graph;
        cfg.problem_path = o.graph;
    } else if (!o.polynomial.empty()) {
        cfg.problem_path = o.polynomial;
    } else {
        throw InvalidArgument("one of --problem or --graph is required");
    }
    if (o.p < 1) {
        throw InvalidArgument("--p must be at least 1");
    }
    cfg.p = o.p;
    switch (parse_guiding_kind(o.guiding)) {
    case GuidingKind::Mean:
        cfg.guiding = GuidingSpec::mean();
        break;
    case GuidingKind::Gibbs:
        cfg.guiding = GuidingSpec::gibbs(o.eta);
        break;
    case GuidingKind::CVaR:
        cfg.guiding = GuidingSpec::cvar(o.alpha);
        break;
    case GuidingKind::Min:
        cfg.guiding = GuidingSpec::min();
        break;
    }
    cfg.optimizer = o.opt;
    cfg.optimizer.method = parse_optimizer_method(o.optimizer);
    cfg.optimizer.validate();
    return cfg;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &stdout_, std::ostream &stderr_,
        const VerifyHooks &hooks) {
    CLI::App app{"Variational quantum optimization on a statevector simulator", "vqa"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    ProblemOptions solve_opts;
    auto *solve_cmd = app.add_subcommand("solve", "Optimize QAOA angles and write a JSON report");
    add_problem_options(solve_cmd, solve_opts);
    add_run_options(solve_cmd, solve_opts, true);

    ProblemOptions land_opts;
    unsigned land_points = 16;
    std::string target;
    auto *land_cmd = app.add_subcommand("landscape", "Sweep the guiding function over an angle grid (CSV)");
    add_problem_options(land_cmd, land_opts);
    add_run_options(land_cmd, land_opts, false);
    land_cmd->add_option("--grid-points", land_points, "Grid points per angle")->capture_default_str();
    land_cmd->add_option("--target", target, "Report this bitstring's probability as p_success");

    VerifyConfig verify_cfg;
    auto *verify_cmd = app.add_subcommand("verify", "Check circuit decompositions against dense oracles");
    verify_cmd->add_option("--n-max", verify_cfg.n_max, "Largest qubit count")->capture_default_str();
    verify_cmd->add_option("--trials", verify_cfg.trials, "Random instances per check")->capture_default_str();
    verify_cmd->add_option("--seed", verify_cfg.seed, "Seed")->capture_default_str();

    ProblemOptions bf_opts;
    auto *bf_cmd = app.add_subcommand("bruteforce", "Exhaustive minimum of the objective (JSON)");
    add_problem_options(bf_cmd, bf_opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, stdout_, stderr_);
        return code == 0 ? kSuccess : kConfigError;
    }

    if (verify_cmd->parsed()) {
        return cmd_verify(verify_cfg, stdout_, stderr_, hooks);
    }
    RunConfig cfg;
    ProblemOptions *chosen = solve_cmd->parsed() ? &solve_opts : land_cmd->parsed() ? &land_opts : &bf_opts;
    if (const int code = guarded(stderr_, [&] {
            cfg = to_run_config(*chosen);
            return kSuccess;
        });
        code != kSuccess) {
        return code;
    }
    if (solve_cmd->parsed()) {
        return cmd_solve(cfg, solve_opts.out, stdout_, stderr_);
    }
    if (land_cmd->parsed()) {
        LandscapeConfig lc{cfg, land_points, std::nullopt};
        if (!target.empty()) {
            lc.target = target;
        }
        return cmd_landscape(lc, land_opts.out, stdout_, stderr_);
    }
    return cmd_bruteforce(cfg, bf_opts.out, stdout_, stderr_);
}

} // namespace vqa::cli
