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
 * n-qubit pure-state simulator.
 *
 * Basis index i is read as the bitstring x_1 x_2 ... x_n with qubit 1 as the
 * most significant bit, so |10> on two qubits is index 2.
 *
 * Sampling reproducibility: sample() draws from std::mt19937_64 seeded with
 * the given seed. Each shot takes one 64-bit output, keeps the top 53 bits
 * as a uniform u in [0, 1), and returns the first basis index whose
 * cumulative probability (accumulated in index order) exceeds u times the
 * total. The same state and seed therefore give the same SampleSet on any
 * platform.
 */
#pragma once

#include "vqa/circuit.hpp"
#include "vqa/linalg.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#ifndef VQA_MAX_QUBITS
#define VQA_MAX_QUBITS 26
#endif

namespace vqa {

using BasisIndex = std::uint64_t;

/// Largest register the simulator will allocate.
inline constexpr unsigned kMaxQubits = VQA_MAX_QUBITS;

/// Default purity tolerance for product-state detection.
inline constexpr double kPurityTolerance = 1e-9;

/// "0110"-style rendering, qubit 1 first.
std::string bitstring(BasisIndex index, unsigned n);
/// Inverse of bitstring(). Throws InvalidArgument on anything but 0/1.
BasisIndex parse_bitstring(std::string_view bits);

class StateVector {
  public:
    /// Takes ownership of 2^n amplitudes; they must be normalized within 1e-9.
    StateVector(unsigned n, std::vector<Complex> amplitudes);

    [[nodiscard]] unsigned num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex operator[](BasisIndex i) const { return amps_[i]; }

    /// In-place variants used by the pure functions below.
    void apply(const GateOp &op);
    void apply(const Circuit &c);

    [[nodiscard]] double norm_squared() const;

  private:
    unsigned n_;
    std::vector<Complex> amps_;
};

StateVector basis_state(unsigned n, BasisIndex index);

/// |0...0>.
inline StateVector zero_state(unsigned n) { return basis_state(n, 0); }

StateVector apply_gate(StateVector state, const GateOp &op);
StateVector apply_circuit(StateVector state, const Circuit &c);

/// p[i] = |amps[i]|^2.
std::vector<double> probabilities(const StateVector &state);

/// Measurement outcomes: counts per basis index.
class SampleSet {
  public:
    SampleSet(unsigned n, std::map<BasisIndex, std::uint64_t> counts, std::uint64_t total);

    [[nodiscard]] unsigned num_qubits() const noexcept { return n_; }
    [[nodiscard]] const std::map<BasisIndex, std::uint64_t> &counts() const noexcept { return counts_; }
    [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
    [[nodiscard]] std::uint64_t count(BasisIndex x) const;

    friend bool operator==(const SampleSet &, const SampleSet &) = default;

  private:
    unsigned n_;
    std::map<BasisIndex, std::uint64_t> counts_;
    std::uint64_t total_;
};

/// `shots` i.i.d. measurements; deterministic in (state, seed).
SampleSet sample(const StateVector &state, std::uint64_t shots, std::uint64_t seed);

/// Same, from a precomputed probability vector of length 2^n.
SampleSet sample(std::span<const double> probs, unsigned n, std::uint64_t shots, std::uint64_t seed);

/// Every one-qubit reduced density matrix has purity >= 1 - tol.
bool is_product_state(const StateVector &state, double tol = kPurityTolerance);

} // namespace vqa
