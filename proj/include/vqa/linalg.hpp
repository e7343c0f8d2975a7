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
 * Dense complex linear algebra used as a verification oracle.
 *
 * Nothing in the simulation hot path builds these matrices. They exist so
 * that circuit decompositions and Hamiltonian identities can be checked
 * entry by entry at small qubit counts (at most 12 qubits, i.e. 4096 x 4096).
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace vqa {

using Complex = std::complex<double>;

/// Largest dense matrix any operation here will build (4096 x 4096).
inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 24;

/// Default tolerance for unitarity and equivalence checks.
inline constexpr double kDefaultTolerance = 1e-10;

/// Row-major dense complex matrix. Entries are always finite.
class ComplexMatrix {
  public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    /// Column vector from amplitudes.
    static ComplexMatrix column(std::span<const Complex> values);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }

    [[nodiscard]] ComplexMatrix adjoint() const;

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &a);

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b. Shapes must match.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Real diagonal of a 2^n x 2^n operator, e.g. a cost Hamiltonian.
class DiagonalOperator {
  public:
    explicit DiagonalOperator(std::vector<double> diag);

    [[nodiscard]] std::size_t dimension() const noexcept { return diag_.size(); }
    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return diag_; }
    [[nodiscard]] double operator[](std::size_t i) const { return diag_[i]; }

  private:
    std::vector<double> diag_;
    unsigned num_qubits_;
};

/// Kronecker product. Throws SizeLimitError past kMaxDenseEntries.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Tensor product of a sequence, left to right.
ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors);

/// True iff max |U^dagger U - I| <= tol.
bool is_unitary(const ComplexMatrix &u, double tol = kDefaultTolerance);

/**
 * True iff U V^dagger is tol-close to e^{i phi} I: off-diagonal entries are
 * at most tol in modulus, all diagonal entries agree with the first one
 * within tol, and that common value has unit modulus.
 */
bool equal_up_to_global_phase(const ComplexMatrix &u, const ComplexMatrix &v,
                              double tol = kDefaultTolerance);

/// diag(exp(-i t h_k)).
ComplexMatrix exp_diagonal(const DiagonalOperator &h, double t);

/// Dense matrix of a diagonal operator.
ComplexMatrix to_dense(const DiagonalOperator &h);

/// exp(-i t A) by truncated Taylor series. Oracle for small Hermitian A.
ComplexMatrix exp_series(const ComplexMatrix &a, double t, int terms = 30);

namespace gates {
ComplexMatrix i2();
ComplexMatrix x();
ComplexMatrix z();
ComplexMatrix h();
ComplexMatrix rx(double theta);
ComplexMatrix ry(double theta);
ComplexMatrix rz(double theta);
/// Two-qubit CX with the first qubit as control.
ComplexMatrix cx();
} // namespace gates

} // namespace vqa
