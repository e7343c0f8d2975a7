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
#include "vqa/statevector.hpp"

#include "vqa/error.hpp"
#include "vqa/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

namespace vqa {

namespace {

constexpr double kNormTolerance = 1e-9;

kernels::Mat2 kernel_matrix(const GateOp &op) {
    const double s2 = 1.0 / std::sqrt(2.0);
    switch (op.kind()) {
    case GateKind::RX: {
        const double c = std::cos(*op.angle() / 2.0);
        const double s = std::sin(*op.angle() / 2.0);
        return {Complex{c, 0.0}, Complex{0.0, -s}, Complex{0.0, -s}, Complex{c, 0.0}};
    }
    case GateKind::RY: {
        const double c = std::cos(*op.angle() / 2.0);
        const double s = std::sin(*op.angle() / 2.0);
        return {Complex{c, 0.0}, Complex{-s, 0.0}, Complex{s, 0.0}, Complex{c, 0.0}};
    }
    case GateKind::RZ:
        return {std::polar(1.0, -*op.angle() / 2.0), 0.0, 0.0, std::polar(1.0, *op.angle() / 2.0)};
    case GateKind::H:
        return {s2, s2, s2, -s2};
    case GateKind::X:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Z:
        return {1.0, 0.0, 0.0, -1.0};
    case GateKind::CX:
        break;
    }
    throw InvalidArgument("kernel_matrix: CX has no 2x2 form");
}

void check_qubit_count(unsigned n) {
    if (n < 1 || n > kMaxQubits) {
        throw SizeLimitError(fmt::format("state vector: {} qubits outside [1, {}]", n, kMaxQubits));
    }
}

} // namespace

std::string bitstring(BasisIndex index, unsigned n) {
    std::string out(n, '0');
    for (unsigned q = 1; q <= n; ++q) {
        if (index & kernels::qubit_mask(n, q)) {
            out[q - 1] = '1';
        }
    }
    return out;
}

BasisIndex parse_bitstring(std::string_view bits) {
    if (bits.empty() || bits.size() > 64) {
        throw InvalidArgument("bitstring must have 1..64 characters");
    }
    BasisIndex out = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidArgument(fmt::format("bad bitstring '{}'", bits));
        }
        out = (out << 1) | static_cast<BasisIndex>(c == '1');
    }
    return out;
}

StateVector::StateVector(unsigned n, std::vector<Complex> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    check_qubit_count(n);
    if (amps_.size() != (std::size_t{1} << n)) {
        throw ShapeError(fmt::format("state vector: expected {} amplitudes, got {}", std::size_t{1} << n,
                                     amps_.size()));
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw InvalidArgument("state vector: amplitudes are not normalized");
    }
}

double StateVector::norm_squared() const {
    std::vector<double> p(amps_.size());
    kernels::probabilities(amps_, p);
    return kernels::sum(p);
}

void StateVector::apply(const GateOp &op) {
    for (unsigned q : op.qubits()) {
        if (q < 1 || q > n_) {
            throw InvalidArgument(fmt::format("apply_gate: qubit {} out of range for {} qubits", q, n_));
        }
    }
    if (op.kind() == GateKind::CX) {
        kernels::apply_cx(amps_, n_, op.control(), op.target());
    } else {
        kernels::apply_1q(amps_, n_, op.target(), kernel_matrix(op));
    }
}

void StateVector::apply(const Circuit &c) {
    if (c.num_qubits() != n_) {
        throw ShapeError("apply_circuit: circuit width differs from state width");
    }
    for (const GateOp &op : c.ops()) {
        apply(op);
    }
}

StateVector basis_state(unsigned n, BasisIndex index) {
    check_qubit_count(n);
    const std::size_t dim = std::size_t{1} << n;
    if (index >= dim) {
        throw InvalidArgument(fmt::format("basis_state: index {} out of range for {} qubits", index, n));
    }
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[index] = 1.0;
    return {n, std::move(amps)};
}

StateVector apply_gate(StateVector state, const GateOp &op) {
    state.apply(op);
    return state;
}

StateVector apply_circuit(StateVector state, const Circuit &c) {
    state.apply(c);
    return state;
}

std::vector<double> probabilities(const StateVector &state) {
    std::vector<double> p(state.dimension());
    kernels::probabilities(state.amplitudes(), p);
    return p;
}

SampleSet::SampleSet(unsigned n, std::map<BasisIndex, std::uint64_t> counts, std::uint64_t total)
    : n_(n), counts_(std::move(counts)), total_(total) {
    if (total_ == 0) {
        throw InvalidArgument("SampleSet: total must be at least 1");
    }
    std::uint64_t acc = 0;
    for (const auto &[x, c] : counts_) {
        if (n_ < 64 && x >= (BasisIndex{1} << n_)) {
            throw InvalidArgument("SampleSet: bitstring out of range");
        }
        acc += c;
    }
    if (acc != total_) {
        throw InvalidArgument("SampleSet: counts do not sum to total");
    }
}

std::uint64_t SampleSet::count(BasisIndex x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
}

SampleSet sample(std::span<const double> probs, unsigned n, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw InvalidArgument("sample: shots must be at least 1");
    }
    if (probs.size() != (std::size_t{1} << n)) {
        throw ShapeError("sample: probability vector length is not 2^n");
    }
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    if (!(acc > 0.0)) {
        throw NumericalError("sample: probabilities sum to zero");
    }
    std::mt19937_64 rng(seed);
    std::map<BasisIndex, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double target = u * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
        if (it == cdf.end()) {
            --it;
        }
        ++counts[static_cast<BasisIndex>(it - cdf.begin())];
    }
    return {n, std::move(counts), shots};
}

SampleSet sample(const StateVector &state, std::uint64_t shots, std::uint64_t seed) {
    return sample(probabilities(state), state.num_qubits(), shots, seed);
}

bool is_product_state(const StateVector &state, double tol) {
    for (unsigned q = 1; q <= state.num_qubits(); ++q) {
        const kernels::ReducedQubit r = kernels::reduce_to_qubit(state.amplitudes(), state.num_qubits(), q);
        const double purity = r.p0 * r.p0 + r.p1 * r.p1 + 2.0 * std::norm(r.coherence);
        if (purity < 1.0 - tol) {
            return false;
        }
    }
    return true;
}

} // namespace vqa
