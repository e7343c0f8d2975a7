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
#include "vqa/linalg.hpp"

#include "vqa/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace vqa {

namespace {

void check_entries(std::span<const Complex> entries) {
    for (const Complex &c : entries) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw NumericalError("ComplexMatrix: non-finite entry");
        }
    }
}

void check_size(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw ShapeError("ComplexMatrix: dimensions must be positive");
    }
    if (rows > kMaxDenseEntries / cols) {
        throw SizeLimitError("ComplexMatrix: " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " exceeds the dense size cap");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_size(rows, cols);
    data_.assign(rows * cols, Complex{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_size(rows, cols);
    if (data_.size() != rows * cols) {
        throw ShapeError("ComplexMatrix: entry count does not match shape");
    }
    check_entries(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
    return {values.size(), 1, std::vector<Complex>(values.begin(), values.end())};
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols_ != b.rows_) {
        throw ShapeError("matrix product: inner dimensions differ");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    // Lifted gates are mostly zeros; skipping them keeps n <= 8 products cheap.
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            const Complex *brow = &b.data_[k * b.cols_];
            Complex *orow = &out.data_[i * out.cols_];
            for (std::size_t j = 0; j < b.cols_; ++j) {
                orow[j] += aik * brow[j];
            }
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw ShapeError("matrix sum: shapes differ");
    }
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a + Complex{-1.0, 0.0} * b;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    ComplexMatrix out = a;
    for (Complex &c : out.data_) {
        c *= s;
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("max_abs_diff: shapes differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

DiagonalOperator::DiagonalOperator(std::vector<double> diag) : diag_(std::move(diag)) {
    if (diag_.empty() || !std::has_single_bit(diag_.size())) {
        throw ShapeError("DiagonalOperator: dimension must be a power of two");
    }
    num_qubits_ = static_cast<unsigned>(std::countr_zero(diag_.size()));
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) {
        throw ShapeError("tensor_product: no factors");
    }
    ComplexMatrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = tensor_product(out, factors[i]);
    }
    return out;
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    if (!u.is_square()) {
        throw ShapeError("is_unitary: matrix is not square");
    }
    return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) <= tol;
}

bool equal_up_to_global_phase(const ComplexMatrix &u, const ComplexMatrix &v, double tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || !u.is_square()) {
        throw ShapeError("equal_up_to_global_phase: shapes differ or are not square");
    }
    const ComplexMatrix w = u * v.adjoint();
    const Complex phase = w(0, 0);
    if (std::abs(std::abs(phase) - 1.0) > tol) {
        return false;
    }
    for (std::size_t r = 0; r < w.rows(); ++r) {
        for (std::size_t c = 0; c < w.cols(); ++c) {
            const double err = (r == c) ? std::abs(w(r, c) - phase) : std::abs(w(r, c));
            if (err > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix exp_diagonal(const DiagonalOperator &h, double t) {
    ComplexMatrix out(h.dimension(), h.dimension());
    for (std::size_t k = 0; k < h.dimension(); ++k) {
        out(k, k) = std::polar(1.0, -t * h[k]);
    }
    return out;
}

ComplexMatrix to_dense(const DiagonalOperator &h) {
    ComplexMatrix out(h.dimension(), h.dimension());
    for (std::size_t k = 0; k < h.dimension(); ++k) {
        out(k, k) = h[k];
    }
    return out;
}

ComplexMatrix exp_series(const ComplexMatrix &a, double t, int terms) {
    if (!a.is_square()) {
        throw ShapeError("exp_series: matrix is not square");
    }
    // Scale so the series argument has norm <= 1/2, then square back up.
    double norm = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            row += std::abs(a(r, c));
        }
        norm = std::max(norm, row);
    }
    int squarings = 0;
    double scaled = std::abs(t) * norm;
    while (scaled > 0.5) {
        scaled /= 2.0;
        ++squarings;
    }
    const Complex factor{0.0, -t / std::ldexp(1.0, squarings)};
    const ComplexMatrix step = factor * a;
    ComplexMatrix sum = ComplexMatrix::identity(a.rows());
    ComplexMatrix term = sum;
    for (int k = 1; k <= terms; ++k) {
        term = Complex{1.0 / k, 0.0} * (term * step);
        sum = sum + term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

namespace gates {

ComplexMatrix i2() { return ComplexMatrix::identity(2); }

ComplexMatrix x() { return {2, 2, {0.0, 1.0, 1.0, 0.0}}; }

ComplexMatrix z() { return {2, 2, {1.0, 0.0, 0.0, -1.0}}; }

ComplexMatrix h() {
    const double s = 1.0 / std::sqrt(2.0);
    return {2, 2, {s, s, s, -s}};
}

ComplexMatrix rx(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {2, 2, {Complex{c, 0.0}, Complex{0.0, -s}, Complex{0.0, -s}, Complex{c, 0.0}}};
}

ComplexMatrix ry(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {2, 2, {c, -s, s, c}};
}

ComplexMatrix rz(double theta) {
    return {2, 2, {std::polar(1.0, -theta / 2.0), 0.0, 0.0, std::polar(1.0, theta / 2.0)}};
}

ComplexMatrix cx() {
    return {4, 4, {1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0}};
}

} // namespace gates

} // namespace vqa
