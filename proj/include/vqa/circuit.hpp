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
 * Gate IR and circuit container.
 *
 * The universal set is {RX, RY, RZ, CX}; H, X and Z are kept as first-class
 * kinds because they read naturally in synthesized circuits, and
 * lower_to_universal() rewrites them on demand. Operations are stored in
 * application order: ops()[0] acts on the state first.
 */
#pragma once

#include "vqa/linalg.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vqa {

/// Dense unitaries are only built up to this many qubits.
inline constexpr unsigned kMaxDenseQubits = 12;

enum class GateKind { RX, RY, RZ, H, X, Z, CX };

std::string_view to_string(GateKind kind);

/// True for RX, RY, RZ.
constexpr bool is_parametrized(GateKind kind) noexcept {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

/// A bound gate instance. Qubit indices are 1-based.
class GateOp {
  public:
    static GateOp rx(double angle, unsigned qubit) { return rotation(GateKind::RX, angle, qubit); }
    static GateOp ry(double angle, unsigned qubit) { return rotation(GateKind::RY, angle, qubit); }
    static GateOp rz(double angle, unsigned qubit) { return rotation(GateKind::RZ, angle, qubit); }
    static GateOp h(unsigned qubit) { return fixed(GateKind::H, qubit); }
    static GateOp x(unsigned qubit) { return fixed(GateKind::X, qubit); }
    static GateOp z(unsigned qubit) { return fixed(GateKind::Z, qubit); }
    static GateOp cx(unsigned control, unsigned target);

    static GateOp rotation(GateKind kind, double angle, unsigned qubit);
    static GateOp fixed(GateKind kind, unsigned qubit);

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::optional<double> angle() const noexcept {
        return is_parametrized(kind_) ? std::optional<double>(angle_) : std::nullopt;
    }
    /// Qubits touched: {qubit} or {control, target}.
    [[nodiscard]] std::span<const unsigned> qubits() const noexcept {
        return {qubits_.data(), kind_ == GateKind::CX ? std::size_t{2} : std::size_t{1}};
    }
    /// Target qubit (the only qubit for one-qubit gates).
    [[nodiscard]] unsigned target() const noexcept { return kind_ == GateKind::CX ? qubits_[1] : qubits_[0]; }
    [[nodiscard]] unsigned control() const noexcept { return qubits_[0]; }

    friend bool operator==(const GateOp &, const GateOp &) = default;

  private:
    GateOp(GateKind kind, double angle, std::array<unsigned, 2> qubits)
        : kind_(kind), angle_(angle), qubits_(qubits) {}

    GateKind kind_;
    double angle_;
    std::array<unsigned, 2> qubits_;
};

/// 2x2 matrix of a one-qubit gate (throws for CX).
ComplexMatrix gate_matrix(const GateOp &op);

class Circuit {
  public:
    explicit Circuit(unsigned num_qubits);

    [[nodiscard]] unsigned num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::span<const GateOp> ops() const noexcept { return ops_; }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }
    [[nodiscard]] bool empty() const noexcept { return ops_.empty(); }

    Circuit &append(const GateOp &op);
    /// Concatenate: `other` is applied after the ops already present.
    Circuit &append(const Circuit &other);

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    unsigned n_;
    std::vector<GateOp> ops_;
};

/// Gate lifted to the full register, I x ... x U x ... x I.
ComplexMatrix lifted_gate(const GateOp &op, unsigned num_qubits);

/// Ordered product of lifted gates (last op leftmost). Requires n <= 12.
ComplexMatrix dense_unitary(const Circuit &c);

/// Rewrites H, X and Z into RX/RY/RZ; equal to the input up to global phase.
Circuit lower_to_universal(const Circuit &c);

struct GateStats {
    std::size_t count = 0;
    std::size_t depth = 0;
    friend bool operator==(const GateStats &, const GateStats &) = default;
};

/// Gate count and depth (longest chain of ops sharing a qubit).
GateStats gate_count_and_depth(const Circuit &c);

/// One op per line, `KIND(angle) q<i>[ q<j>]`.
std::string to_string(const GateOp &op);
std::string dump(const Circuit &c);

} // namespace vqa
