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
 * QAOA circuit synthesis.
 *
 * synthesize() emits H on every qubit followed by p layers of
 * exp_hf(h, gamma_k) then exp_hb(n, beta_k). The cost block is a product of
 * commuting Z-string exponentials, one per non-constant term of h, emitted
 * in lexicographic subset order:
 *
 *   |S| == 1   RZ(2 h_S gamma) on the variable's qubit
 *   |S| == 2   CX(i,j) RZ(2 h_S gamma) on j, CX(i,j)
 *   |S| >= 3   exp_multi_z(S, h_S gamma)
 *
 * The constant term only shifts the energy by a global phase and is dropped.
 * All angles are reduced to [0, 4*pi), the period of RX/RZ as matrices.
 *
 * For f = x1 + 2 x2 - 3 x1 x2 the spin coefficients h_{1} = +1/4 and
 * h_{2} = -1/4 put RZ(+gamma/2) on qubit 1 and RZ(-gamma/2) on qubit 2.
 */
#pragma once

#include "vqa/circuit.hpp"
#include "vqa/hamiltonian.hpp"

#include <vector>

namespace vqa {

/// Depth-p angles; gammas drive the cost block, betas the mixer.
class QaoaParams {
  public:
    QaoaParams(std::vector<double> gammas, std::vector<double> betas);
    /// From a flat vector (gamma_1..gamma_p, beta_1..beta_p).
    static QaoaParams from_flat(std::span<const double> theta);

    [[nodiscard]] unsigned depth() const noexcept { return static_cast<unsigned>(gammas_.size()); }
    [[nodiscard]] std::span<const double> gammas() const noexcept { return gammas_; }
    [[nodiscard]] std::span<const double> betas() const noexcept { return betas_; }
    [[nodiscard]] std::vector<double> flat() const;

  private:
    std::vector<double> gammas_;
    std::vector<double> betas_;
};

/// Angle reduced to [0, 4*pi).
double reduce_angle(double angle);

/// exp(-i t Z_{q1} ... Z_{qN}) for N >= 2: CX ladder onto the last qubit, RZ(2t), mirrored ladder.
Circuit exp_multi_z(unsigned num_qubits, std::span<const unsigned> qubits, double t);

/// exp(-i gamma H_f) without the constant term.
Circuit exp_hf(const IsingPoly &h, double gamma);

/// exp(-i beta sum_i X_i) = RX(2 beta) on every qubit.
Circuit exp_hb(unsigned num_qubits, double beta);

Circuit synthesize(const IsingPoly &h, const QaoaParams &params);

} // namespace vqa
