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
#include "vqa/kernels.hpp"

#include <bit>
#include <cstddef>
#include <vector>

namespace vqa::kernels {

namespace {

using Index = std::int64_t; // OpenMP loop variables must be signed

/// Insert a zero bit at the position of `mask` into k.
constexpr std::uint64_t insert_zero(std::uint64_t k, std::uint64_t mask) noexcept {
    const std::uint64_t low = k & (mask - 1);
    return ((k - low) << 1) | low;
}

inline Complex mul(const Complex &a, const Complex &b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline void rotate_pair(Complex &a0, Complex &a1, const Mat2 &m) noexcept {
    const Complex v0 = a0;
    const Complex v1 = a1;
    a0 = mul(m[0], v0) + mul(m[1], v1);
    a1 = mul(m[2], v0) + mul(m[3], v1);
}

inline double ising_entry(std::uint64_t x, std::span<const std::uint64_t> masks,
                          std::span<const double> coeffs) noexcept {
    double acc = 0.0;
    for (std::size_t t = 0; t < masks.size(); ++t) {
        acc += (std::popcount(x & masks[t]) & 1) ? -coeffs[t] : coeffs[t];
    }
    return acc;
}

inline double monomial_entry(std::uint64_t x, std::span<const std::uint64_t> masks,
                             std::span<const double> coeffs) noexcept {
    double acc = 0.0;
    for (std::size_t t = 0; t < masks.size(); ++t) {
        if ((x & masks[t]) == masks[t]) {
            acc += coeffs[t];
        }
    }
    return acc;
}

} // namespace

void apply_1q(std::span<Complex> amps, unsigned n, unsigned qubit, const Mat2 &m) {
    const std::uint64_t mask = qubit_mask(n, qubit);
    const Index half = static_cast<Index>(amps.size() / 2);
    Complex *data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (Index k = 0; k < half; ++k) {
        const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(k), mask);
        rotate_pair(data[i0], data[i0 | mask], m);
    }
}

void apply_cx(std::span<Complex> amps, unsigned n, unsigned control, unsigned target) {
    const std::uint64_t cmask = qubit_mask(n, control);
    const std::uint64_t tmask = qubit_mask(n, target);
    const std::uint64_t lo = cmask < tmask ? cmask : tmask;
    const std::uint64_t hi = cmask < tmask ? tmask : cmask;
    const Index quarter = static_cast<Index>(amps.size() / 4);
    Complex *data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (Index k = 0; k < quarter; ++k) {
        const std::uint64_t base = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
        std::swap(data[base | cmask], data[base | cmask | tmask]);
    }
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
    const Index dim = static_cast<Index>(amps.size());
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (Index i = 0; i < dim; ++i) {
        out[i] = std::norm(amps[i]);
    }
}

double sum(std::span<const double> values) {
    const std::size_t blocks = (values.size() + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(blocks, 0.0);
    const Index nblocks = static_cast<Index>(blocks);
#pragma omp parallel for schedule(static) if (values.size() >= kParallelThreshold)
    for (Index b = 0; b < nblocks; ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t end = std::min(values.size(), begin + kReductionBlock);
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            acc += values[i];
        }
        partial[b] = acc;
    }
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

ReducedQubit reduce_to_qubit(std::span<const Complex> amps, unsigned n, unsigned qubit) {
    const std::uint64_t mask = qubit_mask(n, qubit);
    const std::size_t half = amps.size() / 2;
    const std::size_t blocks = (half + kReductionBlock - 1) / kReductionBlock;
    std::vector<ReducedQubit> partial(blocks);
    const Index nblocks = static_cast<Index>(blocks);
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (Index b = 0; b < nblocks; ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t end = std::min(half, begin + kReductionBlock);
        ReducedQubit acc;
        for (std::size_t k = begin; k < end; ++k) {
            const std::uint64_t i0 = insert_zero(k, mask);
            const Complex a0 = amps[i0];
            const Complex a1 = amps[i0 | mask];
            acc.p0 += std::norm(a0);
            acc.p1 += std::norm(a1);
            acc.coherence += a0 * std::conj(a1);
        }
        partial[b] = acc;
    }
    ReducedQubit total;
    for (const ReducedQubit &p : partial) {
        total.p0 += p.p0;
        total.p1 += p.p1;
        total.coherence += p.coherence;
    }
    return total;
}

void ising_diagonal(std::span<const std::uint64_t> masks, std::span<const double> coeffs,
                    std::span<double> out) {
    const Index dim = static_cast<Index>(out.size());
#pragma omp parallel for schedule(static) if (out.size() >= kParallelThreshold)
    for (Index x = 0; x < dim; ++x) {
        out[x] = ising_entry(static_cast<std::uint64_t>(x), masks, coeffs);
    }
}

void monomial_values(std::span<const std::uint64_t> masks, std::span<const double> coeffs,
                     std::span<double> out) {
    const Index dim = static_cast<Index>(out.size());
#pragma omp parallel for schedule(static) if (out.size() >= kParallelThreshold)
    for (Index x = 0; x < dim; ++x) {
        out[x] = monomial_entry(static_cast<std::uint64_t>(x), masks, coeffs);
    }
}

namespace serial {

void apply_1q(std::span<Complex> amps, unsigned n, unsigned qubit, const Mat2 &m) {
    const std::uint64_t mask = qubit_mask(n, qubit);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == 0) {
            rotate_pair(amps[i], amps[i | mask], m);
        }
    }
}

void apply_cx(std::span<Complex> amps, unsigned n, unsigned control, unsigned target) {
    const std::uint64_t cmask = qubit_mask(n, control);
    const std::uint64_t tmask = qubit_mask(n, target);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out[i] = std::norm(amps[i]);
    }
}

double sum(std::span<const double> values) {
    double total = 0.0;
    for (double v : values) {
        total += v;
    }
    return total;
}

ReducedQubit reduce_to_qubit(std::span<const Complex> amps, unsigned n, unsigned qubit) {
    const std::uint64_t mask = qubit_mask(n, qubit);
    ReducedQubit acc;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == 0) {
            acc.p0 += std::norm(amps[i]);
            acc.p1 += std::norm(amps[i | mask]);
            acc.coherence += amps[i] * std::conj(amps[i | mask]);
        }
    }
    return acc;
}

void ising_diagonal(std::span<const std::uint64_t> masks, std::span<const double> coeffs,
                    std::span<double> out) {
    for (std::uint64_t x = 0; x < out.size(); ++x) {
        out[x] = ising_entry(x, masks, coeffs);
    }
}

void monomial_values(std::span<const std::uint64_t> masks, std::span<const double> coeffs,
                     std::span<double> out) {
    for (std::uint64_t x = 0; x < out.size(); ++x) {
        out[x] = monomial_entry(x, masks, coeffs);
    }
}

} // namespace serial

} // namespace vqa::kernels
