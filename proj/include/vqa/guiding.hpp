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
 * Guiding functions: scalar summaries of a measurement distribution that the
 * classical optimizer minimizes.
 *
 *   Mean      sum_x p(x) f(x)
 *   Gibbs     -ln sum_x p(x) exp(-eta f(x))
 *   CVaR      mean of f over the lowest alpha-tail of the distribution
 *   Min       min of f over the support (discontinuous; kept for tests)
 *
 * Exact evaluation works on the full probability vector (n <= 22). Sampled
 * evaluation uses the empirical distribution of a SampleSet; sampled CVaR
 * averages the ceil(alpha N) smallest observed values. Outcomes with equal f
 * are ordered by basis index everywhere.
 */
#pragma once

#include "vqa/hamiltonian.hpp"
#include "vqa/statevector.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vqa {

/// Exact guiding evaluation enumerates all 2^n outcomes up to this size.
inline constexpr unsigned kMaxExactQubits = 22;

/// Probability below which an outcome is treated as outside the support.
inline constexpr double kSupportThreshold = 1e-12;

enum class GuidingKind { Mean, Gibbs, CVaR, Min };

class GuidingSpec {
  public:
    static GuidingSpec mean() { return {GuidingKind::Mean, 0.0, 0.0}; }
    static GuidingSpec gibbs(double eta);
    static GuidingSpec cvar(double alpha);
    static GuidingSpec min() { return {GuidingKind::Min, 0.0, 0.0}; }

    [[nodiscard]] GuidingKind kind() const noexcept { return kind_; }
    /// Throws unless kind() == Gibbs.
    [[nodiscard]] double eta() const;
    /// Throws unless kind() == CVaR.
    [[nodiscard]] double alpha() const;

    friend bool operator==(const GuidingSpec &, const GuidingSpec &) = default;

  private:
    GuidingSpec(GuidingKind kind, double eta, double alpha) : kind_(kind), eta_(eta), alpha_(alpha) {}

    GuidingKind kind_;
    double eta_;
    double alpha_;
};

std::string_view to_string(GuidingKind kind);
/// "mean", "gibbs", "cvar" or "min".
GuidingKind parse_guiding_kind(std::string_view name);

/// f tabulated over all 2^n outcomes, with the ascending (f, index) order used by CVaR.
class ObjectiveTable {
  public:
    explicit ObjectiveTable(const PseudoBooleanPoly &f);

    [[nodiscard]] unsigned num_vars() const noexcept { return n_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::span<const BasisIndex> ascending() const noexcept { return order_; }
    [[nodiscard]] double f_star() const noexcept { return values_[order_.front()]; }
    /// All x with f(x) == f* (up to within_optimal()).
    [[nodiscard]] std::vector<BasisIndex> optimal_set() const;
    /// Probability mass on optimal_set().
    [[nodiscard]] double success_probability(std::span<const double> probs) const;

  private:
    unsigned n_;
    std::vector<double> values_;
    std::vector<BasisIndex> order_;
};

/// Whether `value` counts as attaining the optimum `f_star`.
bool within_optimal(double value, double f_star);

double evaluate_exact(const GuidingSpec &spec, std::span<const double> probs, const ObjectiveTable &table);
double evaluate_exact(const GuidingSpec &spec, std::span<const double> probs, const PseudoBooleanPoly &f);

double evaluate_sampled(const GuidingSpec &spec, const SampleSet &samples, const PseudoBooleanPoly &f);

/// Infimum of the guiding function over all distributions: f* (or eta f* for Gibbs).
double minimum_of_guiding(const GuidingSpec &spec, const PseudoBooleanPoly &f);

} // namespace vqa
