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
 * Data-parallel amplitude and diagonal kernels.
 *
 * Every kernel exists twice: `vqa::kernels::serial` is the plain loop kept
 * as the reference implementation, and `vqa::kernels` is the OpenMP version
 * used by the library. Element-wise kernels produce bitwise identical output
 * for any thread count. Reductions sum fixed-size blocks and then combine
 * the block partials in order, so they are also independent of the thread
 * count (but not bitwise equal to the naive serial sum).
 *
 * Qubits are numbered from 1; qubit q of an n-qubit register is bit
 * (n - q) of the basis index, so qubit 1 is the most significant bit.
 */
#pragma once

#include "vqa/linalg.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace vqa::kernels {

/// Row-major 2x2 gate matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

/// Parallel regions are skipped below this many amplitudes.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// Block length used by deterministic reductions.
inline constexpr std::size_t kReductionBlock = std::size_t{1} << 12;

/// Bit mask of qubit q (1-based) in an n-qubit index.
constexpr std::uint64_t qubit_mask(unsigned n, unsigned q) noexcept {
    return std::uint64_t{1} << (n - q);
}

/// Single-qubit reduced density matrix entries.
struct ReducedQubit {
    double p0 = 0.0;
    double p1 = 0.0;
    Complex coherence{0.0, 0.0}; ///< rho_01
};

void apply_1q(std::span<Complex> amps, unsigned n, unsigned qubit, const Mat2 &m);
void apply_cx(std::span<Complex> amps, unsigned n, unsigned control, unsigned target);
void probabilities(std::span<const Complex> amps, std::span<double> out);
double sum(std::span<const double> values);
ReducedQubit reduce_to_qubit(std::span<const Complex> amps, unsigned n, unsigned qubit);

/// out[x] = sum_t coeffs[t] * (-1)^{popcount(x & masks[t])}.
void ising_diagonal(std::span<const std::uint64_t> masks, std::span<const double> coeffs,
                    std::span<double> out);

/// out[x] = sum_t coeffs[t] * [x & masks[t] == masks[t]].
void monomial_values(std::span<const std::uint64_t> masks, std::span<const double> coeffs,
                     std::span<double> out);

namespace serial {
void apply_1q(std::span<Complex> amps, unsigned n, unsigned qubit, const Mat2 &m);
void apply_cx(std::span<Complex> amps, unsigned n, unsigned control, unsigned target);
void probabilities(std::span<const Complex> amps, std::span<double> out);
double sum(std::span<const double> values);
ReducedQubit reduce_to_qubit(std::span<const Complex> amps, unsigned n, unsigned qubit);
void ising_diagonal(std::span<const std::uint64_t> masks, std::span<const double> coeffs,
                    std::span<double> out);
void monomial_values(std::span<const std::uint64_t> masks, std::span<const double> coeffs,
                     std::span<double> out);
} // namespace serial

} // namespace vqa::kernels
