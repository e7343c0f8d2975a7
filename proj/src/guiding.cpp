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
#include "vqa/guiding.hpp"

#include "vqa/error.hpp"
#include "vqa/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

namespace vqa {

namespace {

constexpr double kProbabilitySumTolerance = 1e-9;

void check_finite(double v, std::string_view what) {
    if (!std::isfinite(v)) {
        throw NumericalError(fmt::format("{} guiding value is not finite", what));
    }
}

} // namespace

GuidingSpec GuidingSpec::gibbs(double eta) {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw InvalidArgument("Gibbs guiding function needs eta > 0");
    }
    return {GuidingKind::Gibbs, eta, 0.0};
}

GuidingSpec GuidingSpec::cvar(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw InvalidArgument("CVaR guiding function needs alpha in (0, 1]");
    }
    return {GuidingKind::CVaR, 0.0, alpha};
}

double GuidingSpec::eta() const {
    if (kind_ != GuidingKind::Gibbs) {
        throw InvalidArgument("eta is only defined for the Gibbs guiding function");
    }
    return eta_;
}

double GuidingSpec::alpha() const {
    if (kind_ != GuidingKind::CVaR) {
        throw InvalidArgument("alpha is only defined for the CVaR guiding function");
    }
    return alpha_;
}

std::string_view to_string(GuidingKind kind) {
    switch (kind) {
    case GuidingKind::Mean:
        return "mean";
    case GuidingKind::Gibbs:
        return "gibbs";
    case GuidingKind::CVaR:
        return "cvar";
    case GuidingKind::Min:
        return "min";
    }
    return "?";
}

GuidingKind parse_guiding_kind(std::string_view name) {
    for (GuidingKind k : {GuidingKind::Mean, GuidingKind::Gibbs, GuidingKind::CVaR, GuidingKind::Min}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    throw InvalidArgument(fmt::format("unknown guiding function '{}'", name));
}

bool within_optimal(double value, double f_star) {
    return value <= f_star + 1e-12 * std::max(1.0, std::abs(f_star));
}

ObjectiveTable::ObjectiveTable(const PseudoBooleanPoly &f) : n_(f.num_vars()) {
    if (n_ > kMaxExactQubits) {
        throw SizeLimitError(fmt::format("exact evaluation is capped at {} variables, got {}", kMaxExactQubits, n_));
    }
    values_ = objective_values(f);
    order_.resize(values_.size());
    std::iota(order_.begin(), order_.end(), BasisIndex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [this](BasisIndex a, BasisIndex b) { return values_[a] < values_[b]; });
}

std::vector<BasisIndex> ObjectiveTable::optimal_set() const {
    std::vector<BasisIndex> out;
    const double best = f_star();
    for (BasisIndex x : order_) {
        if (!within_optimal(values_[x], best)) {
            break;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double ObjectiveTable::success_probability(std::span<const double> probs) const {
    double mass = 0.0;
    for (BasisIndex x : optimal_set()) {
        mass += probs[x];
    }
    return mass;
}

namespace {

double exact_mean(std::span<const double> probs, std::span<const double> values) {
    double acc = 0.0;
    for (std::size_t x = 0; x < probs.size(); ++x) {
        acc += probs[x] * values[x];
    }
    return acc;
}

double exact_gibbs(double eta, std::span<const double> probs, std::span<const double> values) {
    // log-sum-exp shifted by the smallest f on the support
    double shift = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < probs.size(); ++x) {
        if (probs[x] > 0.0) {
            shift = std::min(shift, values[x]);
        }
    }
    double acc = 0.0;
    for (std::size_t x = 0; x < probs.size(); ++x) {
        if (probs[x] > 0.0) {
            acc += probs[x] * std::exp(-eta * (values[x] - shift));
        }
    }
    return eta * shift - std::log(acc);
}

double exact_cvar(double alpha, std::span<const double> probs, const ObjectiveTable &table) {
    if (alpha >= 1.0) { // the tail is the whole distribution
        return exact_mean(probs, table.values());
    }
    double mass = 0.0;
    double weighted = 0.0;
    for (BasisIndex x : table.ascending()) {
        mass += probs[x];
        weighted += probs[x] * table.values()[x];
        if (mass >= alpha) {
            break;
        }
    }
    return weighted / mass;
}

double exact_min(std::span<const double> probs, std::span<const double> values) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < probs.size(); ++x) {
        if (probs[x] > kSupportThreshold) {
            best = std::min(best, values[x]);
        }
    }
    return best;
}

} // namespace

double evaluate_exact(const GuidingSpec &spec, std::span<const double> probs, const ObjectiveTable &table) {
    if (probs.size() != table.values().size()) {
        throw ShapeError(fmt::format("evaluate_exact: {} probabilities for {} outcomes", probs.size(),
                                     table.values().size()));
    }
    const double total = kernels::sum(probs);
    if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
        throw InvalidArgument(fmt::format("evaluate_exact: probabilities sum to {}", total));
    }
    double g = 0.0;
    switch (spec.kind()) {
    case GuidingKind::Mean:
        g = exact_mean(probs, table.values());
        break;
    case GuidingKind::Gibbs:
        g = exact_gibbs(spec.eta(), probs, table.values());
        break;
    case GuidingKind::CVaR:
        g = exact_cvar(spec.alpha(), probs, table);
        break;
    case GuidingKind::Min:
        g = exact_min(probs, table.values());
        break;
    }
    check_finite(g, to_string(spec.kind()));
    return g;
}

double evaluate_exact(const GuidingSpec &spec, std::span<const double> probs, const PseudoBooleanPoly &f) {
    return evaluate_exact(spec, probs, ObjectiveTable(f));
}

double evaluate_sampled(const GuidingSpec &spec, const SampleSet &samples, const PseudoBooleanPoly &f) {
    if (samples.total() == 0 || samples.counts().empty()) {
        throw InvalidArgument("evaluate_sampled: empty sample set");
    }
    if (samples.num_qubits() != f.num_vars()) {
        throw ShapeError("evaluate_sampled: sample width differs from the objective's variable count");
    }
    struct Outcome {
        double value;
        BasisIndex x;
        std::uint64_t count;
    };
    // f is evaluated once per distinct outcome
    std::vector<Outcome> outcomes;
    outcomes.reserve(samples.counts().size());
    for (const auto &[x, c] : samples.counts()) {
        outcomes.push_back({evaluate(f, x), x, c});
    }
    const double shots = static_cast<double>(samples.total());
    double g = 0.0;
    switch (spec.kind()) {
    case GuidingKind::Mean: {
        for (const Outcome &o : outcomes) {
            g += static_cast<double>(o.count) * o.value;
        }
        g /= shots;
        break;
    }
    case GuidingKind::Gibbs: {
        double shift = std::numeric_limits<double>::infinity();
        for (const Outcome &o : outcomes) {
            shift = std::min(shift, o.value);
        }
        double acc = 0.0;
        for (const Outcome &o : outcomes) {
            acc += static_cast<double>(o.count) * std::exp(-spec.eta() * (o.value - shift));
        }
        g = spec.eta() * shift - std::log(acc / shots);
        break;
    }
    case GuidingKind::CVaR: {
        std::sort(outcomes.begin(), outcomes.end(), [](const Outcome &a, const Outcome &b) {
            return a.value < b.value || (a.value == b.value && a.x < b.x);
        });
        const double scaled = spec.alpha() * shots;
        // guard against alpha*N landing a hair above an integer
        auto keep = static_cast<std::uint64_t>(std::ceil(scaled - 1e-9 * std::max(1.0, scaled)));
        keep = std::clamp<std::uint64_t>(keep, 1, samples.total());
        std::uint64_t taken = 0;
        double acc = 0.0;
        for (const Outcome &o : outcomes) {
            const std::uint64_t use = std::min(o.count, keep - taken);
            acc += static_cast<double>(use) * o.value;
            taken += use;
            if (taken == keep) {
                break;
            }
        }
        g = acc / static_cast<double>(keep);
        break;
    }
    case GuidingKind::Min: {
        g = std::numeric_limits<double>::infinity();
        for (const Outcome &o : outcomes) {
            g = std::min(g, o.value);
        }
        break;
    }
    }
    check_finite(g, to_string(spec.kind()));
    return g;
}

double minimum_of_guiding(const GuidingSpec &spec, const PseudoBooleanPoly &f) {
    const ObjectiveTable table(f);
    return spec.kind() == GuidingKind::Gibbs ? spec.eta() * table.f_star() : table.f_star();
}

} // namespace vqa
