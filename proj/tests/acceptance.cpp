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
// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "oracles.hpp"

#include "vqa/cli.hpp"
#include "vqa/guiding.hpp"
#include "vqa/linalg.hpp"
#include "vqa/optimize.hpp"
#include "vqa/problems.hpp"
#include "vqa/qaoa.hpp"
#include "vqa/statevector.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace vqa;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<unsigned> first_qubits(unsigned n) {
    std::vector<unsigned> q(n);
    for (unsigned i = 0; i < n; ++i) {
        q[i] = i + 1;
    }
    return q;
}

std::vector<double> parity(unsigned n) {
    std::vector<double> d(std::size_t{1} << n);
    for (std::size_t x = 0; x < d.size(); ++x) {
        d[x] = std::popcount(x) % 2 ? -1.0 : 1.0;
    }
    return d;
}

oracle::Mat to_oracle(const ComplexMatrix &m) {
    oracle::Mat out(m.rows());
    out.a.assign(m.entries().begin(), m.entries().end());
    return out;
}

PseudoBooleanPoly two_variable() {
    PseudoBooleanPoly f(2);
    f.add_term({1}, 1.0).add_term({2}, 2.0).add_term({1, 2}, -3.0);
    return f;
}

Outcome decomposition() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
    double worst = 0.0;
    for (unsigned n = 2; n <= 6; ++n) {
        const std::vector<unsigned> qubits = first_qubits(n);
        for (int trial = 0; trial < 20; ++trial) {
            const double t = angle(rng);
            const Circuit ladder = exp_multi_z(n, qubits, t);
            const oracle::Mat expected = oracle::exp_diag(parity(n), t);
            worst = std::max(worst, oracle::max_diff(to_oracle(dense_unitary(ladder)), expected));
            worst = std::max(worst, oracle::max_diff(oracle::unitary(ladder), expected));
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst <= 1e-10 && seconds < 30.0,
            fmt::format("N=2..6 x 20 angles, max entry error {:.2e}, {:.2f} s", worst, seconds)};
}

Outcome sign_flip() {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
    double worst = 0.0;
    for (unsigned n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const double t = angle(rng);
            // e^{-itZ^{(x)N}} as a library circuit: RZ(2t) for one qubit, the ladder otherwise.
            Circuit forward(n);
            if (n == 1) {
                forward.append(GateOp::rz(2.0 * t, 1));
            } else {
                forward.append(exp_multi_z(n, first_qubits(n), t));
            }
            const ComplexMatrix x_last = lifted_gate(GateOp::x(n), n);
            const ComplexMatrix lhs = x_last * dense_unitary(forward) * x_last;
            worst = std::max(worst, max_abs_diff(lhs, exp_diagonal(DiagonalOperator(parity(n)), -t)));
            // and directly on the operators, without any circuit
            const ComplexMatrix direct = x_last * exp_diagonal(DiagonalOperator(parity(n)), t) * x_last;
            worst = std::max(worst, max_abs_diff(direct, exp_diagonal(DiagonalOperator(parity(n)), -t)));
        }
    }
    return {worst <= 1e-10, fmt::format("N=1..6, max entry error {:.2e}", worst)};
}

Outcome eigen_property() {
    std::mt19937_64 rng(303);
    double dense_worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 1 + trial % 6;
        const PseudoBooleanPoly f = oracle::random_poly(rng, n, 4, 2 * n + 2);
        const IsingPoly h = to_ising(f);
        const std::size_t dim = std::size_t{1} << n;
        oracle::Mat hf(dim);
        for (const auto &[vars, c] : h.terms()) {
            oracle::Mat term = oracle::identity(1);
            for (unsigned q = 1; q <= n; ++q) {
                const bool z = std::find(vars.begin(), vars.end(), q) != vars.end();
                term = oracle::kron(term, z ? oracle::pauli_z() : oracle::identity(2));
            }
            for (std::size_t i = 0; i < term.a.size(); ++i) {
                hf.a[i] += c * term.a[i];
            }
        }
        for (std::size_t x = 0; x < dim; ++x) {
            const double fx = oracle::f_value(f, x);
            for (std::size_t r = 0; r < dim; ++r) {
                const oracle::C expected = r == x ? fx : 0.0;
                dense_worst = std::max(dense_worst, std::abs(hf(r, x) - expected));
            }
        }
    }
    double diag_worst = 0.0;
    for (unsigned n = 1; n <= 12; ++n) {
        const PseudoBooleanPoly f = oracle::random_poly(rng, n, 4, 3 * n);
        const DiagonalOperator d = diagonal(to_ising(f));
        for (std::size_t x = 0; x < d.dimension(); ++x) {
            diag_worst = std::max(diag_worst, std::abs(d[x] - oracle::f_value(f, x)));
        }
    }
    return {dense_worst <= 1e-10 && diag_worst <= 1e-12,
            fmt::format("50 dense checks max {:.2e}; diagonal n<=12 max {:.2e}", dense_worst, diag_worst)};
}

Outcome two_variable_end_to_end() {
    const PseudoBooleanPoly f = two_variable();
    const IsingPoly h = to_ising(f);
    const bool coeffs = h.coefficient({1}) == 0.25 && h.coefficient({2}) == -0.25 &&
                        h.coefficient({1, 2}) == -0.75 && h.constant() == 0.75 && h.terms().size() == 4;

    const std::vector<ComplexMatrix> zi{gates::z(), gates::i2()};
    const std::vector<ComplexMatrix> iz{gates::i2(), gates::z()};
    const std::vector<ComplexMatrix> zz{gates::z(), gates::z()};
    const ComplexMatrix hf = Complex(0.75) * ComplexMatrix::identity(4) + Complex(0.25) * tensor_product(zi) +
                             Complex(-0.25) * tensor_product(iz) + Complex(-0.75) * tensor_product(zz);
    const ComplexMatrix image = hf * ComplexMatrix::column(basis_state(2, 0b10).amplitudes());
    bool eigen = true;
    for (std::size_t r = 0; r < 4; ++r) {
        eigen = eigen && image(r, 0) == (r == 0b10 ? Complex(1.0) : Complex(0.0));
    }

    const std::vector<ComplexMatrix> xi{gates::x(), gates::i2()};
    const std::vector<ComplexMatrix> ix{gates::i2(), gates::x()};
    const ComplexMatrix hb = tensor_product(xi) + tensor_product(ix);
    const std::vector<ComplexMatrix> hh{gates::h(), gates::h()};
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> g(0.0, 2 * kPi), b(0.0, kPi);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const double gamma = g(rng), beta = b(rng);
        const ComplexMatrix expected = exp_series(hb, beta) * exp_series(hf, gamma) * tensor_product(hh);
        const ComplexMatrix got = dense_unitary(synthesize(h, QaoaParams({gamma}, {beta})));
        worst = std::max(worst, oracle::phase_error(to_oracle(got), to_oracle(expected)));
    }
    return {coeffs && eigen && worst <= 1e-9,
            fmt::format("coefficients exact: {}, H_f|10> = 1|10>: {}, phase-aligned error {:.2e}", coeffs, eigen,
                        worst)};
}

Outcome never_half() {
    const IsingPoly h = to_ising(two_variable());
    double best = 0.0;
    double at_gamma = 0.0, at_beta = 0.0;
    for (int i = 0; i < 128; ++i) {
        for (int j = 0; j < 128; ++j) {
            const double gamma = 2.0 * kPi * i / 128.0;
            const double beta = kPi * j / 128.0;
            const StateVector s = apply_circuit(zero_state(2), synthesize(h, QaoaParams({gamma}, {beta})));
            const double p00 = std::norm(s[0]);
            if (p00 > best) {
                best = p00;
                at_gamma = gamma;
                at_beta = beta;
            }
        }
    }
    return {best < 0.5, fmt::format("max p(00) on 128x128 grid = {:.6f} at ({:.4f}, {:.4f})", best, at_gamma, at_beta)};
}

Outcome guiding_properties() {
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> eta_dist(0.1, 5.0);
    int mean_bad = 0, gibbs_bad = 0, cvar_bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const unsigned n = 1 + trial % 6;
        const PseudoBooleanPoly f = oracle::random_poly(rng, n, 4, 2 * n + 1);
        const ObjectiveTable table(f);
        const std::vector<double> p = oracle::random_probs(rng, table.values().size(), trial % 3 ? 0.0 : 0.6);
        const double mean = evaluate_exact(GuidingSpec::mean(), p, table);
        const double eta = eta_dist(rng);
        mean_bad += mean < table.f_star() - 1e-12;
        gibbs_bad += evaluate_exact(GuidingSpec::gibbs(eta), p, table) < eta * table.f_star() - 1e-12;
        cvar_bad += evaluate_exact(GuidingSpec::cvar(1.0), p, table) != mean;
    }

    // Gap |g_G - eta g_mean| should shrink 100x per decade of eta.
    double worst_ratio_error = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + trial % 4;
        PseudoBooleanPoly f = oracle::random_poly(rng, n, 3, 2 * n);
        const ObjectiveTable table(f);
        const std::vector<double> p = oracle::random_probs(rng, table.values().size());
        const double mean = evaluate_exact(GuidingSpec::mean(), p, table);
        double gaps[3];
        const double etas[3] = {1e-2, 1e-3, 1e-4};
        for (int k = 0; k < 3; ++k) {
            gaps[k] = std::abs(evaluate_exact(GuidingSpec::gibbs(etas[k]), p, table) - etas[k] * mean);
        }
        for (int k = 0; k < 2; ++k) {
            worst_ratio_error = std::max(worst_ratio_error, std::abs(gaps[k] / gaps[k + 1] / 100.0 - 1.0));
        }
    }
    const bool pass = mean_bad == 0 && gibbs_bad == 0 && cvar_bad == 0 && worst_ratio_error <= 0.10;
    return {pass, fmt::format("bound violations mean/gibbs/cvar(1) = {}/{}/{} of 1000; worst gap-ratio deviation "
                              "from 100x = {:.2f}%",
                              mean_bad, gibbs_bad, cvar_bad, 100.0 * worst_ratio_error)};
}

Outcome cvar_witness() {
    // f(000) = 1, f = 0 elsewhere.
    PseudoBooleanPoly f(3);
    f.add_term({}, 1.0).add_term({1}, -1.0).add_term({2}, -1.0).add_term({3}, -1.0);
    f.add_term({1, 2}, 1.0).add_term({1, 3}, 1.0).add_term({2, 3}, 1.0).add_term({1, 2, 3}, -1.0);
    bool pass = true;
    std::string detail;
    for (double alpha : {0.25, 0.5, 0.75}) {
        const double bound = kPi - 2.0 * std::acos(std::sqrt(1.0 - alpha));
        for (double fraction : {0.25, 0.5, 0.9}) {
            const double eps = fraction * bound;
            Circuit c(3);
            c.append(GateOp::ry(kPi - eps, 1)).append(GateOp::ry(0.0, 2)).append(GateOp::ry(0.0, 3));
            const std::vector<double> p = probabilities(apply_circuit(zero_state(3), c));
            const double g = evaluate_exact(GuidingSpec::cvar(alpha), p, f);
            pass = pass && g == 0.0 && p[0] > 0.0;
            if (fraction == 0.5) {
                detail += fmt::format("{}alpha={}: g={} p(000)={:.4f}", detail.empty() ? "" : "; ", alpha, g, p[0]);
            }
        }
    }
    return {pass, detail};
}

Outcome sampling_convergence() {
    std::mt19937_64 rng(606);
    const std::uint64_t shots = 100000;
    int beyond4 = 0, beyond3 = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + trial % 5;
        const PseudoBooleanPoly f = oracle::random_poly(rng, n, 3, 2 * n);
        Circuit c(n);
        std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
        for (unsigned q = 1; q <= n; ++q) {
            c.append(GateOp::ry(angle(rng), q)).append(GateOp::rz(angle(rng), q));
        }
        for (unsigned q = 1; q < n; ++q) {
            c.append(GateOp::cx(q, q + 1)).append(GateOp::rx(angle(rng), q + 1));
        }
        const StateVector s = apply_circuit(zero_state(n), c);
        const std::vector<double> p = probabilities(s);
        const ObjectiveTable table(f);
        const double mean = evaluate_exact(GuidingSpec::mean(), p, table);
        double var = 0.0;
        for (std::size_t x = 0; x < p.size(); ++x) {
            var += p[x] * (table.values()[x] - mean) * (table.values()[x] - mean);
        }
        const double se = std::sqrt(var / shots);
        const double dev = std::abs(evaluate_sampled(GuidingSpec::mean(), sample(s, shots, 7000 + trial), f) - mean);
        const double z = se > 0 ? dev / se : (dev == 0 ? 0.0 : INFINITY);
        worst = std::max(worst, z);
        beyond4 += z > 4.0;
        beyond3 += z > 3.0;
    }
    return {beyond4 == 0 && beyond3 <= 2,
            fmt::format("20 states x 1e5 shots: worst |z| = {:.2f}, beyond 3 sigma: {}, beyond 4 sigma: {}", worst,
                        beyond3, beyond4)};
}

Outcome qaoa_benchmark() {
    const auto start = std::chrono::steady_clock::now();
    OptimizerConfig cfg;
    cfg.method = OptimizerMethod::GridSearch;
    cfg.grid_points = 48;
    cfg.restarts = 4;
    cfg.max_iters = 2000;
    cfg.tol = 1e-13;
    cfg.initial_step = 0.1;
    double worst = 1.0;
    std::string worst_id;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const unsigned n = seed <= 5 ? 6 : 8;
        const Graph g = random_regular_graph(n, 3, seed);
        const PseudoBooleanPoly f = maxcut_objective(g);
        const double f_star = brute_force_min(f).f_star;
        const VqaResult r = run_vqa(to_ising(f), f, 1, GuidingSpec::mean(), cfg);
        const double ratio = approximation_ratio(*r.mean_at_best_theta, f_star);
        if (ratio < worst) {
            worst = ratio;
            worst_id = fmt::format("n={} seed={}", n, seed);
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst >= kQaoaP1CubicBound && seconds < 300.0,
            fmt::format("10 cubic graphs (n=6,8): min ratio {:.6f} ({}) vs bound {}, {:.1f} s", worst, worst_id,
                        kQaoaP1CubicBound, seconds)};
}

Outcome entanglement() {
    Circuit bell(2);
    bell.append(GateOp::h(1)).append(GateOp::cx(1, 2));
    const bool bell_entangled = !is_product_state(apply_circuit(zero_state(2), bell));

    std::mt19937_64 rng(707);
    std::uniform_real_distribution<double> angle(0.0, 4 * kPi);
    int products = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 1 + trial % 8;
        Circuit c(n);
        for (unsigned q = 1; q <= n; ++q) {
            c.append(GateOp::ry(angle(rng), q));
        }
        products += is_product_state(apply_circuit(zero_state(n), c));
    }

    const IsingPoly h = to_ising(two_variable());
    int qaoa_entangled = 0;
    std::uniform_real_distribution<double> g(0.1, 2 * kPi - 0.1), b(0.1, kPi - 0.1);
    for (int trial = 0; trial < 10; ++trial) {
        const QaoaParams params({g(rng)}, {b(rng)});
        qaoa_entangled += !is_product_state(apply_circuit(zero_state(2), synthesize(h, params)));
    }
    return {bell_entangled && products == 100 && qaoa_entangled == 10,
            fmt::format("Bell entangled: {}; RY products detected: {}/100; QAOA states entangled: {}/10",
                        bell_entangled, products, qaoa_entangled)};
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "vqa_acceptance";
    fs::create_directories(dir);
    RunConfig cfg;
    cfg.problem_kind = ProblemKind::Graph;
    const Graph g = random_regular_graph(8, 3, 11);
    cfg.problem_path = dir / "cubic8.graph";
    {
        std::ofstream out(cfg.problem_path);
        write_graph(out, g);
    }
    cfg.guiding = GuidingSpec::cvar(0.25);
    cfg.optimizer.shots = 1024;
    cfg.optimizer.seed = 2024;
    cfg.optimizer.restarts = 4;

    auto run_once = [&]() -> std::string {
        const fs::path out = dir / "report.json";
        std::ostringstream so, se;
        if (cli::cmd_solve(cfg, out, so, se) != cli::kSuccess) {
            return "error: " + se.str();
        }
        std::ifstream in(out);
        const std::string text{std::istreambuf_iterator<char>(in), {}};
        return report_body(nlohmann::json::parse(text)).dump(2);
    };
    const std::string a = run_once();
    const std::string b = run_once();
    return {a == b && a.rfind("error", 0) != 0,
            fmt::format("two solve runs, {} byte report bodies, identical: {}", a.size(), a == b)};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"decomposition ladder == parity exponential", decomposition},
        {"X conjugation flips the exponent sign", sign_flip},
        {"cost Hamiltonian eigen-property", eigen_property},
        {"two-variable example end to end", two_variable_end_to_end},
        {"p(00) < 1/2 over the angle grid", never_half},
        {"guiding-function properties", guiding_properties},
        {"CVaR pseudo-guiding witness", cvar_witness},
        {"sampling convergence", sampling_convergence},
        {"QAOA p=1 cubic-graph benchmark", qaoa_benchmark},
        {"entanglement detection", entanglement},
        {"solve determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << fmt::format("[{}] {:>2}. {}: {}", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail)
                  << std::endl;
    }
    std::cout << fmt::format("{} of {} criteria passed", criteria.size() - failures, criteria.size()) << std::endl;
    return failures == 0 ? 0 : 1;
}
