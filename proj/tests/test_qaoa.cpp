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
#include "oracles.hpp"

#include "vqa/error.hpp"
#include "vqa/qaoa.hpp"
#include "vqa/statevector.hpp"

#include <catch_amalgamated.hpp>

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

using namespace vqa;

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Diagonal of Z on every qubit in `qubits` (a parity sign), n-qubit register.
std::vector<double> parity_diagonal(unsigned n, const std::vector<unsigned> &qubits) {
    std::vector<double> d(std::size_t{1} << n);
    for (std::size_t x = 0; x < d.size(); ++x) {
        unsigned ones = 0;
        for (unsigned q : qubits) {
            ones += oracle::bit(x, n, q);
        }
        d[x] = ones % 2 ? -1.0 : 1.0;
    }
    return d;
}

oracle::Mat qaoa_oracle(const PseudoBooleanPoly &f, const std::vector<double> &gammas,
                        const std::vector<double> &betas) {
    const unsigned n = f.num_vars();
    oracle::Mat u = oracle::identity(std::size_t{1} << n);
    for (unsigned q = 1; q <= n; ++q) {
        u = oracle::mul(oracle::on_qubit(oracle::hadamard(), q, n), u);
    }
    const std::vector<double> table = oracle::f_table(f);
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        u = oracle::mul(oracle::exp_diag(table, gammas[k]), u);
        for (unsigned q = 1; q <= n; ++q) {
            u = oracle::mul(oracle::on_qubit(oracle::rx(2.0 * betas[k]), q, n), u);
        }
    }
    return u;
}

oracle::Mat to_oracle(const ComplexMatrix &m) {
    oracle::Mat out(m.rows());
    out.a.assign(m.entries().begin(), m.entries().end());
    return out;
}

} // namespace

TEST_CASE("angle reduction", "[qaoa]") {
    CHECK(reduce_angle(0.0) == 0.0);
    CHECK(reduce_angle(kFourPi) == 0.0);
    CHECK(reduce_angle(-0.25) == Catch::Approx(kFourPi - 0.25).epsilon(1e-15));
    CHECK(reduce_angle(1.0 + 3 * kFourPi) == Catch::Approx(1.0).epsilon(1e-13));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const double r = reduce_angle(u(rng));
        CHECK(r >= 0.0);
        CHECK(r < kFourPi);
    }
}

TEST_CASE("parameters", "[qaoa]") {
    const QaoaParams p = QaoaParams::from_flat(std::vector<double>{0.1, 0.2, 0.3, 0.4});
    CHECK(p.depth() == 2);
    CHECK(p.gammas()[1] == 0.2);
    CHECK(p.betas()[0] == 0.3);
    CHECK(p.flat() == std::vector<double>{0.1, 0.2, 0.3, 0.4});
    CHECK_THROWS_AS(QaoaParams({}, {}), InvalidArgument);
    CHECK_THROWS_AS(QaoaParams({0.1}, {0.1, 0.2}), InvalidArgument);
    CHECK_THROWS_AS(QaoaParams::from_flat(std::vector<double>{0.1, 0.2, 0.3}), InvalidArgument);
}

TEST_CASE("Z-string ladder equals the parity exponential", "[qaoa]") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    SECTION("contiguous qubits") {
        for (unsigned n = 2; n <= 6; ++n) {
            std::vector<unsigned> qubits(n);
            for (unsigned i = 0; i < n; ++i) {
                qubits[i] = i + 1;
            }
            for (int trial = 0; trial < 5; ++trial) {
                const double t = angle(rng);
                const oracle::Mat got = oracle::unitary(exp_multi_z(n, qubits, t));
                CHECK(oracle::max_diff(got, oracle::exp_diag(parity_diagonal(n, qubits), t)) < 1e-12);
            }
        }
    }
    SECTION("scattered qubits on a wider register") {
        const std::vector<unsigned> qubits{2, 5, 3};
        const double t = angle(rng);
        const oracle::Mat got = oracle::unitary(exp_multi_z(5, qubits, t));
        CHECK(oracle::max_diff(got, oracle::exp_diag(parity_diagonal(5, qubits), t)) < 1e-12);
    }
    SECTION("needs at least two qubits") {
        const std::vector<unsigned> one{1};
        CHECK_THROWS_AS(exp_multi_z(2, one, 0.5), InvalidArgument);
    }
}

TEST_CASE("conjugating by X on the target flips the exponent sign", "[qaoa]") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> angle(-5.0, 5.0);
    for (unsigned n = 2; n <= 5; ++n) {
        std::vector<unsigned> qubits(n);
        for (unsigned i = 0; i < n; ++i) {
            qubits[i] = i + 1;
        }
        const double t = angle(rng);
        Circuit c(n);
        c.append(GateOp::x(n)).append(exp_multi_z(n, qubits, t)).append(GateOp::x(n));
        CHECK(oracle::max_diff(oracle::unitary(c), oracle::exp_diag(parity_diagonal(n, qubits), -t)) < 1e-12);
    }
}

TEST_CASE("cost and mixer blocks", "[qaoa]") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (unsigned n = 1; n <= 5; ++n) {
        const PseudoBooleanPoly f = oracle::random_poly(rng, n, 4, 3 * n);
        const IsingPoly h = to_ising(f);
        const double gamma = angle(rng);
        // The constant is dropped, so subtract it before comparing exactly.
        std::vector<double> shifted = oracle::f_table(f);
        for (double &v : shifted) {
            v -= h.constant();
        }
        CHECK(oracle::max_diff(oracle::unitary(exp_hf(h, gamma)), oracle::exp_diag(shifted, gamma)) < 1e-11);

        const double beta = angle(rng);
        oracle::Mat mixer = oracle::identity(std::size_t{1} << n);
        for (unsigned q = 1; q <= n; ++q) {
            mixer = oracle::mul(oracle::on_qubit(oracle::rx(2.0 * beta), q, n), mixer);
        }
        CHECK(oracle::max_diff(oracle::unitary(exp_hb(n, beta)), mixer) < 1e-13);
    }
}

TEST_CASE("synthesized circuits match the operator product up to phase", "[qaoa]") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> gamma(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> beta(0.0, std::numbers::pi);
    for (unsigned p = 1; p <= 3; ++p) {
        for (unsigned n = 1; n <= 5; ++n) {
            const PseudoBooleanPoly f = oracle::random_poly(rng, n, 3, 2 * n + 1);
            std::vector<double> gs(p), bs(p);
            for (unsigned k = 0; k < p; ++k) {
                gs[k] = gamma(rng);
                bs[k] = beta(rng);
            }
            const Circuit c = synthesize(to_ising(f), QaoaParams(gs, bs));
            CHECK(oracle::phase_error(to_oracle(dense_unitary(c)), qaoa_oracle(f, gs, bs)) < 1e-10);
            CHECK(gate_count_and_depth(c).count == c.size());
        }
    }
}

TEST_CASE("the two-variable example cannot concentrate on 00", "[qaoa]") {
    PseudoBooleanPoly f(2);
    f.add_term({1}, 1.0).add_term({2}, 2.0).add_term({1, 2}, -3.0);
    const IsingPoly h = to_ising(f);
    double best = 0.0;
    for (int i = 0; i < 48; ++i) {
        for (int j = 0; j < 48; ++j) {
            const double g = 2.0 * std::numbers::pi * i / 48;
            const double b = std::numbers::pi * j / 48;
            const auto probs = probabilities(apply_circuit(zero_state(2), synthesize(h, QaoaParams({g}, {b}))));
            best = std::max(best, probs[0]);
        }
    }
    CHECK(best < 0.5);
    CHECK(best > 0.4);
}
