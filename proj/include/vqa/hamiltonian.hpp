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
 * Pseudo-Boolean objectives and their Ising (spin) form.
 *
 * A PseudoBooleanPoly is f(x) = sum_S c_S prod_{i in S} x_i over x in {0,1}^n.
 * to_ising() substitutes x_i = (1 - z_i) / 2 and returns the spin polynomial
 * f_pm(z) = sum_S h_S prod_{i in S} z_i with f(x) == f_pm(1 - 2x). Its
 * coefficients define the diagonal cost Hamiltonian H_f = sum_S h_S Z^S, whose
 * entry at basis state |x> is f(x).
 *
 * Polynomial file format (one term per line):
 *
 *     # comment, also allowed after a term
 *     n 3           optional variable count; default is the largest index
 *     1.5: 1 2      coefficient, colon, 1-based variable indices
 *     -3:           empty index list is the constant term
 *
 * Indices within a term must be distinct; repeated terms are summed.
 */
#pragma once

#include "vqa/linalg.hpp"
#include "vqa/statevector.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace vqa {

/// Sorted, duplicate-free, 1-based variable indices. Empty = constant.
using Subset = std::vector<unsigned>;

struct BinaryVariables {};
struct SpinVariables {};

/// Sparse multilinear polynomial; no zero coefficients are stored.
template <class Variables> class Polynomial {
  public:
    explicit Polynomial(unsigned num_vars = 0) : n_(num_vars) {}

    /// Adds coeff to the term on `vars` (sorted here; must be distinct and in [1, n]).
    Polynomial &add_term(Subset vars, double coeff);

    [[nodiscard]] unsigned num_vars() const noexcept { return n_; }
    [[nodiscard]] const std::map<Subset, double> &terms() const noexcept { return terms_; }
    [[nodiscard]] double coefficient(const Subset &vars) const;
    [[nodiscard]] double constant() const { return coefficient({}); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

  private:
    unsigned n_;
    std::map<Subset, double> terms_;
};

using PseudoBooleanPoly = Polynomial<BinaryVariables>;
using IsingPoly = Polynomial<SpinVariables>;

extern template class Polynomial<BinaryVariables>;
extern template class Polynomial<SpinVariables>;

/// Spin form under z_i = 1 - 2 x_i.
IsingPoly to_ising(const PseudoBooleanPoly &f);

/// f at x in {0,1}^n.
double evaluate(const PseudoBooleanPoly &f, std::span<const int> x);
/// f_pm at z in {-1,1}^n.
double evaluate(const IsingPoly &h, std::span<const int> z);

/// f at the bitstring of a basis index (qubit/variable 1 = MSB).
double evaluate(const PseudoBooleanPoly &f, BasisIndex x);
/// f_pm at z = 1 - 2x for the bitstring of a basis index.
double evaluate(const IsingPoly &h, BasisIndex x);

/// Diagonal of sum_S h_S Z^S; entry x equals f(x). Requires n <= 26.
DiagonalOperator diagonal(const IsingPoly &h);

/// f(x) for every x in index order. Requires n <= 26.
std::vector<double> objective_values(const PseudoBooleanPoly &f);

/// Largest subset size among stored terms (0 for constants and the zero polynomial).
template <class Variables> unsigned degree(const Polynomial<Variables> &p) {
    unsigned d = 0;
    for (const auto &[vars, c] : p.terms()) {
        d = std::max(d, static_cast<unsigned>(vars.size()));
    }
    return d;
}

/// Same polynomial without its constant term.
IsingPoly without_constant(const IsingPoly &h);

/// Bit mask of a subset in an n-variable basis index.
std::uint64_t subset_mask(const Subset &vars, unsigned n);

PseudoBooleanPoly parse_polynomial(std::istream &in);
PseudoBooleanPoly read_polynomial_file(const std::filesystem::path &path);
void write_polynomial(std::ostream &out, const PseudoBooleanPoly &f);

} // namespace vqa
