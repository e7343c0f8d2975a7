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
 * The classical half of the variational loop.
 *
 * run_vqa() repeatedly synthesizes the QAOA circuit at theta =
 * (gamma_1..gamma_p, beta_1..beta_p), simulates it from |0...0>, scores the
 * outcome with a guiding function and lets the optimizer propose the next
 * theta. With shots == 0 the guiding function is evaluated exactly from the
 * probability vector; otherwise from `shots` samples drawn with a seed
 * derived from (cfg.seed, restart, evaluation index).
 *
 * Independently of the guiding value, every evaluation "probes" bitstrings:
 * the sampled ones in shot mode, the support (p > 1e-12) in exact mode. The
 * lowest f ever probed is the returned solution (best_value).
 *
 * Restarts run in parallel. Their results are merged in restart order, so
 * the outcome depends only on the configuration, never on thread count.
 */
#pragma once

#include "vqa/guiding.hpp"
#include "vqa/hamiltonian.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace vqa {

enum class OptimizerMethod { NelderMead, FiniteDiffGradient, GridSearch };

std::string_view to_string(OptimizerMethod m);
/// "nelder-mead", "grad" or "grid".
OptimizerMethod parse_optimizer_method(std::string_view name);

/// Default shot count when sampling is requested without an explicit N.
inline constexpr std::uint64_t kDefaultShots = 1024;

struct OptimizerConfig {
    OptimizerMethod method = OptimizerMethod::NelderMead;
    /// Random restarts (NelderMead, FiniteDiffGradient) or polished grid points (GridSearch).
    unsigned restarts = 10;
    unsigned max_iters = 500;
    /// Nelder-Mead: simplex value spread; gradient descent: change in objective.
    double tol = 1e-10;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    unsigned grid_points = 16;
    double initial_step = 0.5;
    double fd_step = 1e-4;
    double learning_rate = 0.05;

    void validate() const;

    friend bool operator==(const OptimizerConfig &, const OptimizerConfig &) = default;
};

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
    unsigned max_iters = 500;
    double tol = 1e-10;
    double initial_step = 0.5;
};

struct NelderMeadResult {
    std::vector<double> theta;
    double value = 0.0;
    unsigned iterations = 0;
    bool converged = false;
    /// Best vertex value after each iteration (first entry: initial simplex).
    std::vector<double> best_values;
};

/// Simplex search with reflection 1, expansion 2, contraction 1/2, shrink 1/2.
NelderMeadResult nelder_mead(const Objective &objective, std::span<const double> init, const NelderMeadOptions &opts);

/// Central differences (g(theta + s e_k) - g(theta - s e_k)) / 2s.
std::vector<double> finite_diff_gradient(const Objective &objective, std::span<const double> theta, double step);

struct ParameterRange {
    double lo;
    double hi;
};

/**
 * Cartesian grid over gamma_range^p x beta_range^p with `points` values per
 * coordinate, lo + k (hi - lo) / points. The first coordinate varies slowest.
 * Full grids are limited to 2p <= 4 and 2^22 points.
 */
std::vector<std::vector<double>> parameter_grid(unsigned p, ParameterRange gamma_range, ParameterRange beta_range,
                                                unsigned points);

std::vector<std::vector<double>> parameter_grid(unsigned p, unsigned points);

struct HistoryEntry {
    unsigned restart = 0;
    std::vector<double> theta;
    double value = 0.0;
    friend bool operator==(const HistoryEntry &, const HistoryEntry &) = default;
};

struct VqaResult {
    std::vector<double> best_theta;
    BasisIndex best_bitstring = 0;
    double best_value = 0.0;
    double guiding_value_at_best_theta = 0.0;
    /// Mass on the optimal set at best_theta; present when n <= 22.
    std::optional<double> success_probability;
    /// Exact mean of f at best_theta; present when n <= 22.
    std::optional<double> mean_at_best_theta;
    std::vector<HistoryEntry> history;
    std::uint64_t evaluations = 0;
    std::uint64_t total_circuit_executions = 0;

    friend bool operator==(const VqaResult &, const VqaResult &) = default;
};

/// Seed for evaluation `index` of `restart`, mixed from the master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t restart, std::uint64_t index);

VqaResult run_vqa(const IsingPoly &h, const PseudoBooleanPoly &f, unsigned p, const GuidingSpec &spec,
                  const OptimizerConfig &cfg);

} // namespace vqa
