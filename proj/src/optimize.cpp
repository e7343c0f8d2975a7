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
#include "vqa/optimize.hpp"

#include "vqa/error.hpp"
#include "vqa/qaoa.hpp"
#include "vqa/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace vqa {

std::string_view to_string(OptimizerMethod m) {
    switch (m) {
    case OptimizerMethod::NelderMead:
        return "nelder-mead";
    case OptimizerMethod::FiniteDiffGradient:
        return "grad";
    case OptimizerMethod::GridSearch:
        return "grid";
    }
    return "?";
}

OptimizerMethod parse_optimizer_method(std::string_view name) {
    for (auto m : {OptimizerMethod::NelderMead, OptimizerMethod::FiniteDiffGradient, OptimizerMethod::GridSearch}) {
        if (name == to_string(m)) {
            return m;
        }
    }
    throw InvalidArgument(fmt::format("unknown optimizer '{}'", name));
}

void OptimizerConfig::validate() const {
    if (restarts < 1) {
        throw InvalidArgument("optimizer: restarts must be at least 1");
    }
    if (max_iters < 1) {
        throw InvalidArgument("optimizer: max_iters must be at least 1");
    }
    if (!(tol > 0.0)) {
        throw InvalidArgument("optimizer: tol must be positive");
    }
    if (method == OptimizerMethod::GridSearch && grid_points < 2) {
        throw InvalidArgument("optimizer: grid search needs at least 2 points per dimension");
    }
    if (!(initial_step > 0.0) || !(fd_step > 0.0) || !(learning_rate > 0.0)) {
        throw InvalidArgument("optimizer: step sizes must be positive");
    }
}

namespace {

double checked(const Objective &objective, std::span<const double> theta) {
    const double v = objective(theta);
    if (!std::isfinite(v)) {
        throw NumericalError(fmt::format("objective is not finite at theta = [{}]", fmt::join(theta, ", ")));
    }
    return v;
}

} // namespace

NelderMeadResult nelder_mead(const Objective &objective, std::span<const double> init, const NelderMeadOptions &opts) {
    const std::size_t dim = init.size();
    if (dim < 1) {
        throw InvalidArgument("nelder_mead: dimension must be at least 1");
    }
    using Point = std::vector<double>;
    std::vector<Point> simplex(dim + 1, Point(init.begin(), init.end()));
    for (std::size_t k = 0; k < dim; ++k) {
        simplex[k + 1][k] += opts.initial_step;
    }
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
        values[i] = checked(objective, simplex[i]);
    }
    std::vector<std::size_t> order(dim + 1);

    auto along = [dim](const Point &from, const Point &to, double coeff) {
        Point out(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            out[k] = from[k] + coeff * (to[k] - from[k]);
        }
        return out;
    };

    NelderMeadResult result;
    auto sort_vertices = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    };
    sort_vertices();
    result.best_values.push_back(values[order.front()]);

    while (result.iterations < opts.max_iters) {
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[dim - 1];
        if (values[worst] - values[best] < opts.tol) {
            result.converged = true;
            break;
        }
        ++result.iterations;

        Point centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                centroid[k] += simplex[order[i]][k];
            }
        }
        for (double &c : centroid) {
            c /= static_cast<double>(dim);
        }

        Point reflected = along(centroid, simplex[worst], -1.0);
        const double fr = checked(objective, reflected);
        if (fr < values[best]) {
            Point expanded = along(centroid, reflected, 2.0);
            const double fe = checked(objective, expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = fr;
            }
        } else if (fr < values[second_worst]) {
            simplex[worst] = std::move(reflected);
            values[worst] = fr;
        } else {
            bool accepted = false;
            if (fr < values[worst]) {
                Point outside = along(centroid, reflected, 0.5);
                const double fc = checked(objective, outside);
                if (fc <= fr) {
                    simplex[worst] = std::move(outside);
                    values[worst] = fc;
                    accepted = true;
                }
            } else {
                Point inside = along(centroid, simplex[worst], 0.5);
                const double fc = checked(objective, inside);
                if (fc < values[worst]) {
                    simplex[worst] = std::move(inside);
                    values[worst] = fc;
                    accepted = true;
                }
            }
            if (!accepted) {
                for (std::size_t i = 0; i <= dim; ++i) {
                    if (i == best) {
                        continue;
                    }
                    simplex[i] = along(simplex[best], simplex[i], 0.5);
                    values[i] = checked(objective, simplex[i]);
                }
            }
        }
        sort_vertices();
        result.best_values.push_back(values[order.front()]);
    }
    result.theta = simplex[order.front()];
    result.value = values[order.front()];
    return result;
}

std::vector<double> finite_diff_gradient(const Objective &objective, std::span<const double> theta, double step) {
    if (!(step > 0.0)) {
        throw InvalidArgument("finite_diff_gradient: step must be positive");
    }
    std::vector<double> grad(theta.size());
    std::vector<double> probe(theta.begin(), theta.end());
    for (std::size_t k = 0; k < theta.size(); ++k) {
        probe[k] = theta[k] + step;
        const double up = checked(objective, probe);
        probe[k] = theta[k] - step;
        const double down = checked(objective, probe);
        probe[k] = theta[k];
        grad[k] = (up - down) / (2.0 * step);
    }
    return grad;
}

std::vector<std::vector<double>> parameter_grid(unsigned p, ParameterRange gamma_range, ParameterRange beta_range,
                                                unsigned points) {
    if (p < 1) {
        throw InvalidArgument("parameter_grid: depth must be at least 1");
    }
    if (points < 2) {
        throw InvalidArgument("parameter_grid: need at least 2 points per dimension");
    }
    const unsigned dims = 2 * p;
    if (dims > 4) {
        throw SizeLimitError(fmt::format("parameter_grid: full grids are limited to 2p <= 4, got p = {}", p));
    }
    constexpr double kMaxPoints = 1 << 22;
    if (std::pow(static_cast<double>(points), dims) > kMaxPoints) {
        throw SizeLimitError(fmt::format("parameter_grid: {}^{} points exceeds the cap", points, dims));
    }
    std::size_t total = 1;
    for (unsigned d = 0; d < dims; ++d) {
        total *= points;
    }
    std::vector<std::vector<double>> grid;
    grid.reserve(total);
    std::vector<unsigned> digit(dims, 0);
    for (std::size_t i = 0; i < total; ++i) {
        std::vector<double> theta(dims);
        for (unsigned d = 0; d < dims; ++d) {
            const ParameterRange &r = d < p ? gamma_range : beta_range;
            theta[d] = r.lo + (r.hi - r.lo) * digit[d] / points;
        }
        grid.push_back(std::move(theta));
        for (unsigned d = dims; d-- > 0;) { // last coordinate fastest
            if (++digit[d] < points) {
                break;
            }
            digit[d] = 0;
        }
    }
    return grid;
}

std::vector<std::vector<double>> parameter_grid(unsigned p, unsigned points) {
    return parameter_grid(p, {0.0, 2.0 * std::numbers::pi}, {0.0, std::numbers::pi}, points);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t restart, std::uint64_t index) {
    auto splitmix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return splitmix(splitmix(splitmix(master) ^ restart) ^ index);
}

namespace {

/// Outcome of one circuit evaluation.
struct Probe {
    double guiding = 0.0;
    BasisIndex best_x = 0;
    double best_f = std::numeric_limits<double>::infinity();
};

/// Shared read-only problem data plus the evaluation routine.
class Evaluator {
  public:
    Evaluator(const IsingPoly &h, const PseudoBooleanPoly &f, const GuidingSpec &spec, const OptimizerConfig &cfg)
        : h_(h), f_(f), spec_(spec), cfg_(cfg) {
        if (f.num_vars() <= kMaxExactQubits) {
            table_.emplace(f);
        } else if (cfg.shots == 0) {
            throw SizeLimitError(fmt::format("exact mode is capped at {} qubits, got {}; use shots > 0",
                                             kMaxExactQubits, f.num_vars()));
        }
    }

    [[nodiscard]] std::vector<double> probabilities_at(std::span<const double> theta) const {
        const Circuit c = synthesize(h_, QaoaParams::from_flat(theta));
        return probabilities(apply_circuit(zero_state(h_.num_vars()), c));
    }

    [[nodiscard]] Probe evaluate(std::span<const double> theta, unsigned restart, std::uint64_t index) const {
        const std::vector<double> probs = probabilities_at(theta);
        Probe out;
        if (cfg_.shots == 0) {
            out.guiding = evaluate_exact(spec_, probs, *table_);
            for (BasisIndex x : table_->ascending()) {
                if (probs[x] > kSupportThreshold) {
                    out.best_x = x;
                    out.best_f = table_->values()[x];
                    break;
                }
            }
        } else {
            const SampleSet samples =
                sample(probs, h_.num_vars(), cfg_.shots, derive_seed(cfg_.seed, restart, index));
            out.guiding = evaluate_sampled(spec_, samples, f_);
            for (const auto &[x, count] : samples.counts()) { // ascending x, so ties keep the lowest
                const double v = table_ ? table_->values()[x] : vqa::evaluate(f_, x);
                if (v < out.best_f) {
                    out.best_f = v;
                    out.best_x = x;
                }
            }
        }
        if (!std::isfinite(out.guiding)) {
            throw NumericalError(fmt::format("guiding value is not finite at theta = [{}]", fmt::join(theta, ", ")));
        }
        return out;
    }

    [[nodiscard]] const std::optional<ObjectiveTable> &table() const noexcept { return table_; }

  private:
    const IsingPoly &h_;
    const PseudoBooleanPoly &f_;
    const GuidingSpec &spec_;
    const OptimizerConfig &cfg_;
    std::optional<ObjectiveTable> table_;
};

/// Everything one restart produced.
struct RestartTrace {
    std::vector<HistoryEntry> history;
    std::vector<double> best_theta;
    double best_guiding = std::numeric_limits<double>::infinity();
    BasisIndex best_x = 0;
    double best_f = std::numeric_limits<double>::infinity();
    std::exception_ptr error;
};

/// Objective wrapper that records every evaluation of one restart.
class Recorder {
  public:
    Recorder(const Evaluator &eval, unsigned restart, RestartTrace &trace)
        : eval_(eval), restart_(restart), trace_(trace) {}

    double operator()(std::span<const double> theta) {
        const Probe probe = eval_.evaluate(theta, restart_, trace_.history.size());
        trace_.history.push_back({restart_, std::vector<double>(theta.begin(), theta.end()), probe.guiding});
        if (probe.guiding < trace_.best_guiding) {
            trace_.best_guiding = probe.guiding;
            trace_.best_theta.assign(theta.begin(), theta.end());
        }
        if (probe.best_f < trace_.best_f || (probe.best_f == trace_.best_f && probe.best_x < trace_.best_x)) {
            trace_.best_f = probe.best_f;
            trace_.best_x = probe.best_x;
        }
        return probe.guiding;
    }

  private:
    const Evaluator &eval_;
    unsigned restart_;
    RestartTrace &trace_;
};

std::vector<double> random_start(unsigned p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<double> theta(2 * p);
    for (unsigned k = 0; k < p; ++k) {
        theta[k] = 2.0 * std::numbers::pi * uniform();
    }
    for (unsigned k = 0; k < p; ++k) {
        theta[p + k] = std::numbers::pi * uniform();
    }
    return theta;
}

void gradient_descent(Recorder &objective, std::vector<double> theta, const OptimizerConfig &cfg) {
    const Objective fn = [&objective](std::span<const double> t) { return objective(t); };
    double value = fn(theta);
    for (unsigned it = 0; it < cfg.max_iters; ++it) {
        const std::vector<double> grad = finite_diff_gradient(fn, theta, cfg.fd_step);
        for (std::size_t k = 0; k < theta.size(); ++k) {
            theta[k] -= cfg.learning_rate * grad[k];
        }
        const double next = fn(theta);
        const bool done = std::abs(next - value) < cfg.tol;
        value = next;
        if (done) {
            break;
        }
    }
}

template <class Body> void for_each_restart(std::vector<RestartTrace> &traces, Body body) {
    const auto count = static_cast<std::int64_t>(traces.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < count; ++r) {
        try {
            body(static_cast<unsigned>(r), traces[static_cast<std::size_t>(r)]);
        } catch (...) {
            traces[static_cast<std::size_t>(r)].error = std::current_exception();
        }
    }
    for (const RestartTrace &t : traces) {
        if (t.error) {
            std::rethrow_exception(t.error);
        }
    }
}

} // namespace

VqaResult run_vqa(const IsingPoly &h, const PseudoBooleanPoly &f, unsigned p, const GuidingSpec &spec,
                  const OptimizerConfig &cfg) {
    cfg.validate();
    if (p < 1) {
        throw InvalidArgument("run_vqa: depth p must be at least 1");
    }
    if (h.num_vars() != f.num_vars() || h.num_vars() < 1) {
        throw InvalidArgument("run_vqa: h and f must share a positive variable count");
    }
    if (h.num_vars() > kMaxQubits) {
        throw SizeLimitError(fmt::format("run_vqa: {} qubits exceeds the cap of {}", h.num_vars(), kMaxQubits));
    }
    const Evaluator eval(h, f, spec, cfg);
    NelderMeadOptions nm{cfg.max_iters, cfg.tol, cfg.initial_step};

    std::vector<RestartTrace> traces;
    switch (cfg.method) {
    case OptimizerMethod::NelderMead:
    case OptimizerMethod::FiniteDiffGradient: {
        traces.resize(cfg.restarts);
        for_each_restart(traces, [&](unsigned r, RestartTrace &trace) {
            Recorder rec(eval, r, trace);
            std::vector<double> start = random_start(p, derive_seed(cfg.seed, r, ~std::uint64_t{0}));
            if (cfg.method == OptimizerMethod::NelderMead) {
                nelder_mead([&rec](std::span<const double> t) { return rec(t); }, start, nm);
            } else {
                gradient_descent(rec, std::move(start), cfg);
            }
        });
        break;
    }
    case OptimizerMethod::GridSearch: {
        // Trace 0 holds the grid scan; traces 1..restarts polish its best points.
        const std::vector<std::vector<double>> grid = parameter_grid(p, cfg.grid_points);
        RestartTrace scan;
        scan.history.resize(grid.size());
        std::vector<Probe> probes(grid.size());
        std::exception_ptr error;
        const auto count = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                const auto k = static_cast<std::size_t>(i);
                probes[k] = eval.evaluate(grid[k], 0, k);
                scan.history[k] = {0, grid[k], probes[k].guiding};
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
        for (std::size_t k = 0; k < grid.size(); ++k) {
            if (probes[k].guiding < scan.best_guiding) {
                scan.best_guiding = probes[k].guiding;
                scan.best_theta = grid[k];
            }
            if (probes[k].best_f < scan.best_f || (probes[k].best_f == scan.best_f && probes[k].best_x < scan.best_x)) {
                scan.best_f = probes[k].best_f;
                scan.best_x = probes[k].best_x;
            }
        }
        std::vector<std::size_t> ranked(grid.size());
        std::iota(ranked.begin(), ranked.end(), std::size_t{0});
        std::stable_sort(ranked.begin(), ranked.end(),
                         [&](std::size_t a, std::size_t b) { return probes[a].guiding < probes[b].guiding; });
        const std::size_t polish = std::min<std::size_t>(cfg.restarts, grid.size());
        traces.resize(polish + 1);
        traces[0] = std::move(scan);
        std::vector<RestartTrace> polished(polish);
        for_each_restart(polished, [&](unsigned r, RestartTrace &trace) {
            Recorder rec(eval, r + 1, trace);
            nelder_mead([&rec](std::span<const double> t) { return rec(t); }, grid[ranked[r]], nm);
        });
        std::move(polished.begin(), polished.end(), traces.begin() + 1);
        break;
    }
    }

    VqaResult result;
    const RestartTrace *best_guiding = nullptr;
    const RestartTrace *best_probe = nullptr;
    for (const RestartTrace &t : traces) {
        result.history.insert(result.history.end(), t.history.begin(), t.history.end());
        if (!best_guiding || t.best_guiding < best_guiding->best_guiding) {
            best_guiding = &t;
        }
        if (!best_probe || t.best_f < best_probe->best_f ||
            (t.best_f == best_probe->best_f && t.best_x < best_probe->best_x)) {
            best_probe = &t;
        }
    }
    result.best_theta = best_guiding->best_theta;
    result.guiding_value_at_best_theta = best_guiding->best_guiding;
    result.best_bitstring = best_probe->best_x;
    result.best_value = vqa::evaluate(f, best_probe->best_x);
    result.evaluations = result.history.size();
    result.total_circuit_executions = result.evaluations * (cfg.shots == 0 ? 1 : 2);
    if (eval.table()) {
        const std::vector<double> probs = eval.probabilities_at(result.best_theta);
        result.success_probability = eval.table()->success_probability(probs);
        result.mean_at_best_theta = evaluate_exact(GuidingSpec::mean(), probs, *eval.table());
    }
    return result;
}

} // namespace vqa
