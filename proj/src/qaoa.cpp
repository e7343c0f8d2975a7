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
#include "vqa/qaoa.hpp"

#include "vqa/error.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace vqa {

QaoaParams::QaoaParams(std::vector<double> gammas, std::vector<double> betas)
    : gammas_(std::move(gammas)), betas_(std::move(betas)) {
    if (gammas_.empty() || gammas_.size() != betas_.size()) {
        throw InvalidArgument("QaoaParams: need p >= 1 gammas and as many betas");
    }
    for (double a : gammas_) {
        if (!std::isfinite(a)) {
            throw InvalidArgument("QaoaParams: non-finite gamma");
        }
    }
    for (double a : betas_) {
        if (!std::isfinite(a)) {
            throw InvalidArgument("QaoaParams: non-finite beta");
        }
    }
}

QaoaParams QaoaParams::from_flat(std::span<const double> theta) {
    if (theta.size() % 2 != 0) {
        throw InvalidArgument("QaoaParams: flat parameter vector must have even length");
    }
    const std::size_t p = theta.size() / 2;
    return {std::vector<double>(theta.begin(), theta.begin() + p), std::vector<double>(theta.begin() + p, theta.end())};
}

std::vector<double> QaoaParams::flat() const {
    std::vector<double> out(gammas_);
    out.insert(out.end(), betas_.begin(), betas_.end());
    return out;
}

double reduce_angle(double angle) {
    constexpr double period = 4.0 * std::numbers::pi;
    double r = std::fmod(angle, period);
    if (r < 0.0) {
        r += period;
    }
    if (r >= period) { // fmod rounding at the boundary
        r = 0.0;
    }
    return r;
}

Circuit exp_multi_z(unsigned num_qubits, std::span<const unsigned> qubits, double t) {
    if (qubits.size() < 2) {
        throw InvalidArgument("exp_multi_z: need at least two qubits");
    }
    Circuit c(num_qubits);
    const unsigned target = qubits.back();
    for (std::size_t k = 0; k + 1 < qubits.size(); ++k) {
        c.append(GateOp::cx(qubits[k], target));
    }
    c.append(GateOp::rz(reduce_angle(2.0 * t), target));
    for (std::size_t k = qubits.size() - 1; k-- > 0;) {
        c.append(GateOp::cx(qubits[k], target));
    }
    return c;
}

Circuit exp_hf(const IsingPoly &h, double gamma) {
    if (h.num_vars() < 1) {
        throw InvalidArgument("exp_hf: need at least one qubit");
    }
    Circuit c(h.num_vars());
    for (const auto &[vars, coeff] : h.terms()) {
        const double t = coeff * gamma;
        if (vars.empty()) {
            continue;
        }
        if (vars.size() == 1) {
            c.append(GateOp::rz(reduce_angle(2.0 * t), vars[0]));
        } else {
            c.append(exp_multi_z(h.num_vars(), vars, t));
        }
    }
    return c;
}

Circuit exp_hb(unsigned num_qubits, double beta) {
    Circuit c(num_qubits);
    const double angle = reduce_angle(2.0 * beta);
    for (unsigned q = 1; q <= num_qubits; ++q) {
        c.append(GateOp::rx(angle, q));
    }
    return c;
}

Circuit synthesize(const IsingPoly &h, const QaoaParams &params) {
    if (h.num_vars() < 1) {
        throw InvalidArgument("synthesize: need at least one qubit");
    }
    const unsigned n = h.num_vars();
    Circuit c(n);
    for (unsigned q = 1; q <= n; ++q) {
        c.append(GateOp::h(q));
    }
    for (unsigned k = 0; k < params.depth(); ++k) {
        c.append(exp_hf(h, params.gammas()[k]));
        c.append(exp_hb(n, params.betas()[k]));
    }
    return c;
}

} // namespace vqa
