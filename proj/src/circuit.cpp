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
#include "vqa/circuit.hpp"

#include "vqa/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace vqa {

std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::Z:
        return "Z";
    case GateKind::CX:
        return "CX";
    }
    return "?";
}

GateOp GateOp::rotation(GateKind kind, double angle, unsigned qubit) {
    if (!is_parametrized(kind)) {
        throw InvalidArgument("GateOp: " + std::string(to_string(kind)) + " takes no angle");
    }
    if (!std::isfinite(angle)) {
        throw InvalidArgument("GateOp: angle must be finite");
    }
    if (qubit < 1) {
        throw InvalidArgument("GateOp: qubit indices start at 1");
    }
    return {kind, angle, {qubit, 0}};
}

GateOp GateOp::fixed(GateKind kind, unsigned qubit) {
    if (is_parametrized(kind) || kind == GateKind::CX) {
        throw InvalidArgument("GateOp: " + std::string(to_string(kind)) + " is not a fixed one-qubit gate");
    }
    if (qubit < 1) {
        throw InvalidArgument("GateOp: qubit indices start at 1");
    }
    return {kind, 0.0, {qubit, 0}};
}

GateOp GateOp::cx(unsigned control, unsigned target) {
    if (control < 1 || target < 1) {
        throw InvalidArgument("GateOp: qubit indices start at 1");
    }
    if (control == target) {
        throw InvalidArgument("GateOp: CX control and target must differ");
    }
    return {GateKind::CX, 0.0, {control, target}};
}

ComplexMatrix gate_matrix(const GateOp &op) {
    switch (op.kind()) {
    case GateKind::RX:
        return gates::rx(*op.angle());
    case GateKind::RY:
        return gates::ry(*op.angle());
    case GateKind::RZ:
        return gates::rz(*op.angle());
    case GateKind::H:
        return gates::h();
    case GateKind::X:
        return gates::x();
    case GateKind::Z:
        return gates::z();
    case GateKind::CX:
        break;
    }
    throw InvalidArgument("gate_matrix: CX is a two-qubit gate");
}

Circuit::Circuit(unsigned num_qubits) : n_(num_qubits) {
    if (num_qubits < 1) {
        throw InvalidArgument("Circuit: need at least one qubit");
    }
}

Circuit &Circuit::append(const GateOp &op) {
    for (unsigned q : op.qubits()) {
        if (q > n_) {
            throw InvalidArgument(fmt::format("Circuit: qubit {} out of range for {} qubits", q, n_));
        }
    }
    ops_.push_back(op);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_ != n_) {
        throw ShapeError("Circuit: cannot concatenate circuits of different widths");
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
}

ComplexMatrix lifted_gate(const GateOp &op, unsigned num_qubits) {
    if (num_qubits > kMaxDenseQubits) {
        throw SizeLimitError(fmt::format("dense matrices are capped at {} qubits", kMaxDenseQubits));
    }
    for (unsigned q : op.qubits()) {
        if (q < 1 || q > num_qubits) {
            throw InvalidArgument(fmt::format("lifted_gate: qubit {} out of range", q));
        }
    }
    if (op.kind() != GateKind::CX) {
        std::vector<ComplexMatrix> factors(num_qubits, gates::i2());
        factors[op.target() - 1] = gate_matrix(op);
        return tensor_product(factors);
    }
    // CX = |0><0|_c x I + |1><1|_c x X_t
    const ComplexMatrix p0(2, 2, {1.0, 0.0, 0.0, 0.0});
    const ComplexMatrix p1(2, 2, {0.0, 0.0, 0.0, 1.0});
    std::vector<ComplexMatrix> idle(num_qubits, gates::i2());
    std::vector<ComplexMatrix> flip(num_qubits, gates::i2());
    idle[op.control() - 1] = p0;
    flip[op.control() - 1] = p1;
    flip[op.target() - 1] = gates::x();
    return tensor_product(idle) + tensor_product(flip);
}

ComplexMatrix dense_unitary(const Circuit &c) {
    if (c.num_qubits() > kMaxDenseQubits) {
        throw SizeLimitError(fmt::format("dense_unitary: {} qubits exceeds the cap of {}", c.num_qubits(),
                                         kMaxDenseQubits));
    }
    ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << c.num_qubits());
    for (const GateOp &op : c.ops()) {
        u = lifted_gate(op, c.num_qubits()) * u;
    }
    return u;
}

Circuit lower_to_universal(const Circuit &c) {
    constexpr double pi = std::numbers::pi;
    Circuit out(c.num_qubits());
    for (const GateOp &op : c.ops()) {
        switch (op.kind()) {
        case GateKind::H: // H = RX(pi) RY(pi/2) up to phase
            out.append(GateOp::ry(pi / 2.0, op.target()));
            out.append(GateOp::rx(pi, op.target()));
            break;
        case GateKind::X:
            out.append(GateOp::rx(pi, op.target()));
            break;
        case GateKind::Z:
            out.append(GateOp::rz(pi, op.target()));
            break;
        default:
            out.append(op);
            break;
        }
    }
    return out;
}

GateStats gate_count_and_depth(const Circuit &c) {
    std::vector<std::size_t> layer(c.num_qubits() + 1, 0);
    std::size_t depth = 0;
    for (const GateOp &op : c.ops()) {
        std::size_t next = 0;
        for (unsigned q : op.qubits()) {
            next = std::max(next, layer[q]);
        }
        ++next;
        for (unsigned q : op.qubits()) {
            layer[q] = next;
        }
        depth = std::max(depth, next);
    }
    return {c.size(), depth};
}

std::string to_string(const GateOp &op) {
    std::string out(to_string(op.kind()));
    if (auto angle = op.angle()) {
        const double a = (*angle == 0.0) ? 0.0 : *angle; // no "-0"
        out += fmt::format("({:.10f})", a);
    }
    for (unsigned q : op.qubits()) {
        out += fmt::format(" q{}", q);
    }
    return out;
}

std::string dump(const Circuit &c) {
    std::string out;
    for (const GateOp &op : c.ops()) {
        out += to_string(op);
        out += '\n';
    }
    return out;
}

} // namespace vqa
