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

#include "vqa/circuit.hpp"
#include "vqa/error.hpp"
#include "vqa/hamiltonian.hpp"
#include "vqa/qaoa.hpp"

#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

using namespace vqa;

namespace {

ComplexMatrix from_oracle(const oracle::Mat &m) { return ComplexMatrix(m.dim, m.dim, m.a); }

} // namespace

TEST_CASE("gate ops validate their arguments", "[circuit]") {
    CHECK_THROWS_AS(GateOp::rx(0.1, 0), InvalidArgument);
    CHECK_THROWS_AS(GateOp::cx(2, 2), InvalidArgument);
    CHECK_THROWS_AS(GateOp::rotation(GateKind::H, 0.3, 1), InvalidArgument);
    CHECK_THROWS_AS(GateOp::fixed(GateKind::RZ, 1), InvalidArgument);
    CHECK_THROWS_AS(GateOp::rz(std::numeric_limits<double>::infinity(), 1), InvalidArgument);
    CHECK_THROWS_AS(Circuit(2).append(GateOp::h(3)), InvalidArgument);
    CHECK_THROWS_AS(Circuit(2).append(Circuit(3)), ShapeError);
    CHECK_THROWS_AS(Circuit(0), InvalidArgument);

    const GateOp cx = GateOp::cx(3, 1);
    CHECK(cx.control() == 3);
    CHECK(cx.target() == 1);
    CHECK(cx.qubits().size() == 2);
    CHECK_FALSE(cx.angle().has_value());
    CHECK(GateOp::ry(0.5, 2).angle() == 0.5);
}

TEST_CASE("dense unitaries match an entry-wise oracle", "[circuit]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    Circuit c(3);
    c.append(GateOp::h(2))
        .append(GateOp::cx(2, 1))
        .append(GateOp::rx(angle(rng), 3))
        .append(GateOp::cx(1, 3))
        .append(GateOp::ry(angle(rng), 1))
        .append(GateOp::rz(angle(rng), 2))
        .append(GateOp::x(3))
        .append(GateOp::z(1))
        .append(GateOp::cx(3, 2));
    const ComplexMatrix u = dense_unitary(c);
    CHECK(max_abs_diff(u, from_oracle(oracle::unitary(c))) < 1e-14);
    CHECK(is_unitary(u));
    CHECK_THROWS_AS(dense_unitary(Circuit(kMaxDenseQubits + 1)), SizeLimitError);
}

TEST_CASE("CX lifting respects qubit order", "[circuit]") {
    // CX(2,1) on two qubits swaps |01> and |11>.
    const ComplexMatrix u = lifted_gate(GateOp::cx(2, 1), 2);
    CHECK(u(3, 1) == Complex(1.0));
    CHECK(u(1, 3) == Complex(1.0));
    CHECK(u(0, 0) == Complex(1.0));
    CHECK(u(2, 2) == Complex(1.0));
}

TEST_CASE("lowering to RX/RY/RZ preserves the unitary up to phase", "[circuit]") {
    Circuit c(2);
    c.append(GateOp::h(1)).append(GateOp::x(2)).append(GateOp::z(1)).append(GateOp::cx(1, 2)).append(GateOp::h(2));
    const Circuit lowered = lower_to_universal(c);
    for (const GateOp &op : lowered.ops()) {
        CHECK((op.kind() == GateKind::RX || op.kind() == GateKind::RY || op.kind() == GateKind::RZ ||
               op.kind() == GateKind::CX));
    }
    CHECK(equal_up_to_global_phase(dense_unitary(c), dense_unitary(lowered)));
    CHECK(lowered.size() == 7);
}

TEST_CASE("gate count and depth", "[circuit]") {
    SECTION("four-qubit Z-string ladder is fully sequential") {
        const std::vector<unsigned> qubits{1, 2, 3, 4};
        const GateStats stats = gate_count_and_depth(exp_multi_z(4, qubits, 0.3));
        CHECK(stats == GateStats{7, 7});
    }
    SECTION("parallel one-qubit layer") {
        Circuit c(3);
        c.append(GateOp::h(1)).append(GateOp::h(2)).append(GateOp::h(3)).append(GateOp::cx(1, 2));
        CHECK(gate_count_and_depth(c) == GateStats{4, 2});
    }
    SECTION("empty circuit") {
        CHECK(gate_count_and_depth(Circuit(2)) == GateStats{0, 0});
    }
}

TEST_CASE("golden dump of the two-variable QAOA circuit", "[circuit][golden]") {
    PseudoBooleanPoly f(2);
    f.add_term({1}, 1.0).add_term({2}, 2.0).add_term({1, 2}, -3.0);
    const Circuit c = synthesize(to_ising(f), QaoaParams({0.5}, {0.25}));
    CHECK(dump(c) == "H q1\n"
                     "H q2\n"
                     "RZ(0.2500000000) q1\n"
                     "CX q1 q2\n"
                     "RZ(11.8163706144) q2\n"
                     "CX q1 q2\n"
                     "RZ(12.3163706144) q2\n"
                     "RX(0.5000000000) q1\n"
                     "RX(0.5000000000) q2\n");
}

TEST_CASE("golden dump of a three-qubit ladder", "[circuit][golden]") {
    const std::vector<unsigned> qubits{1, 3, 4};
    CHECK(dump(exp_multi_z(4, qubits, 0.5)) == "CX q1 q4\n"
                                                "CX q3 q4\n"
                                                "RZ(1.0000000000) q4\n"
                                                "CX q3 q4\n"
                                                "CX q1 q4\n");
}
