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
#include "vqa/hamiltonian.hpp"

#include "vqa/error.hpp"
#include "vqa/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace vqa {

template <class Variables> Polynomial<Variables> &Polynomial<Variables>::add_term(Subset vars, double coeff) {
    if (!std::isfinite(coeff)) {
        throw InvalidArgument("polynomial: coefficient must be finite");
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
        throw InvalidArgument("polynomial: repeated variable in a term");
    }
    if (!vars.empty() && (vars.front() < 1 || vars.back() > n_)) {
        throw InvalidArgument(fmt::format("polynomial: variable index out of range [1, {}]", n_));
    }
    if (coeff == 0.0) {
        return *this;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(vars), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0) {
            terms_.erase(it);
        }
    }
    return *this;
}

template <class Variables> double Polynomial<Variables>::coefficient(const Subset &vars) const {
    auto it = terms_.find(vars);
    return it == terms_.end() ? 0.0 : it->second;
}

template class Polynomial<BinaryVariables>;
template class Polynomial<SpinVariables>;

IsingPoly to_ising(const PseudoBooleanPoly &f) {
    IsingPoly h(f.num_vars());
    for (const auto &[vars, c] : f.terms()) {
        const std::size_t k = vars.size();
        if (k > 52) {
            throw SizeLimitError("to_ising: terms of degree > 52 are not supported");
        }
        // prod_{i in S} (1 - z_i)/2 = 2^{-k} sum_{T subset S} (-1)^{|T|} z^T
        const double scaled = std::ldexp(c, -static_cast<int>(k));
        const std::uint64_t subsets = std::uint64_t{1} << k;
        for (std::uint64_t m = 0; m < subsets; ++m) {
            Subset t;
            for (std::size_t b = 0; b < k; ++b) {
                if (m & (std::uint64_t{1} << b)) {
                    t.push_back(vars[b]);
                }
            }
            const double sign = (t.size() % 2 == 0) ? 1.0 : -1.0;
            h.add_term(std::move(t), sign * scaled);
        }
    }
    return h;
}

namespace {

void check_length(std::size_t got, unsigned n) {
    if (got != n) {
        throw ShapeError(fmt::format("evaluate: point has {} entries, polynomial has {} variables", got, n));
    }
}

} // namespace

double evaluate(const PseudoBooleanPoly &f, std::span<const int> x) {
    check_length(x.size(), f.num_vars());
    for (int v : x) {
        if (v != 0 && v != 1) {
            throw InvalidArgument("evaluate: binary point entries must be 0 or 1");
        }
    }
    double acc = 0.0;
    for (const auto &[vars, c] : f.terms()) {
        double term = c;
        for (unsigned i : vars) {
            term *= x[i - 1];
        }
        acc += term;
    }
    return acc;
}

double evaluate(const IsingPoly &h, std::span<const int> z) {
    check_length(z.size(), h.num_vars());
    for (int v : z) {
        if (v != 1 && v != -1) {
            throw InvalidArgument("evaluate: spin point entries must be -1 or 1");
        }
    }
    double acc = 0.0;
    for (const auto &[vars, c] : h.terms()) {
        double term = c;
        for (unsigned i : vars) {
            term *= z[i - 1];
        }
        acc += term;
    }
    return acc;
}

double evaluate(const PseudoBooleanPoly &f, BasisIndex x) {
    double acc = 0.0;
    for (const auto &[vars, c] : f.terms()) {
        const std::uint64_t m = subset_mask(vars, f.num_vars());
        if ((x & m) == m) {
            acc += c;
        }
    }
    return acc;
}

double evaluate(const IsingPoly &h, BasisIndex x) {
    double acc = 0.0;
    for (const auto &[vars, c] : h.terms()) {
        const std::uint64_t m = subset_mask(vars, h.num_vars());
        acc += (std::popcount(x & m) & 1) ? -c : c;
    }
    return acc;
}

std::uint64_t subset_mask(const Subset &vars, unsigned n) {
    std::uint64_t m = 0;
    for (unsigned i : vars) {
        m |= kernels::qubit_mask(n, i);
    }
    return m;
}

namespace {

template <class Variables> void flatten(const Polynomial<Variables> &p, std::vector<std::uint64_t> &masks,
                                        std::vector<double> &coeffs) {
    if (p.num_vars() > kMaxQubits) {
        throw SizeLimitError(fmt::format("{} variables exceeds the cap of {}", p.num_vars(), kMaxQubits));
    }
    for (const auto &[vars, c] : p.terms()) {
        masks.push_back(subset_mask(vars, p.num_vars()));
        coeffs.push_back(c);
    }
}

} // namespace

DiagonalOperator diagonal(const IsingPoly &h) {
    std::vector<std::uint64_t> masks;
    std::vector<double> coeffs;
    flatten(h, masks, coeffs);
    std::vector<double> diag(std::size_t{1} << h.num_vars());
    kernels::ising_diagonal(masks, coeffs, diag);
    return DiagonalOperator(std::move(diag));
}

std::vector<double> objective_values(const PseudoBooleanPoly &f) {
    std::vector<std::uint64_t> masks;
    std::vector<double> coeffs;
    flatten(f, masks, coeffs);
    std::vector<double> values(std::size_t{1} << f.num_vars());
    kernels::monomial_values(masks, coeffs, values);
    return values;
}

IsingPoly without_constant(const IsingPoly &h) {
    IsingPoly out(h.num_vars());
    for (const auto &[vars, c] : h.terms()) {
        if (!vars.empty()) {
            out.add_term(vars, c);
        }
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view text, std::size_t line_no) {
    const std::string s(trim(text));
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (s.empty() || used != s.size() || !std::isfinite(v)) {
        throw InvalidArgument(fmt::format("polynomial line {}: bad coefficient '{}'", line_no, s));
    }
    return v;
}

unsigned parse_index(const std::string &tok, std::size_t line_no) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9) {
        throw InvalidArgument(fmt::format("polynomial line {}: bad variable index '{}'", line_no, tok));
    }
    const unsigned v = static_cast<unsigned>(std::stoul(tok));
    if (v == 0) {
        throw InvalidArgument(fmt::format("polynomial line {}: variable indices start at 1", line_no));
    }
    return v;
}

} // namespace

PseudoBooleanPoly parse_polynomial(std::istream &in) {
    std::vector<std::pair<Subset, double>> terms;
    std::optional<unsigned> declared;
    unsigned max_index = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            std::istringstream ss{std::string(line)};
            std::string key;
            std::string value;
            std::string extra;
            ss >> key >> value;
            if (key != "n" || value.empty() || (ss >> extra)) {
                throw InvalidArgument(fmt::format("polynomial line {}: expected 'coeff: indices' or 'n <count>'",
                                                  line_no));
            }
            if (declared) {
                throw InvalidArgument(fmt::format("polynomial line {}: variable count declared twice", line_no));
            }
            declared = parse_index(value, line_no);
            continue;
        }
        const double coeff = parse_real(line.substr(0, colon), line_no);
        Subset vars;
        std::istringstream ss{std::string(line.substr(colon + 1))};
        std::string tok;
        while (ss >> tok) {
            vars.push_back(parse_index(tok, line_no));
            max_index = std::max(max_index, vars.back());
        }
        terms.emplace_back(std::move(vars), coeff);
    }
    const unsigned n = declared.value_or(max_index);
    if (max_index > n) {
        throw InvalidArgument(fmt::format("polynomial: index {} exceeds declared variable count {}", max_index, n));
    }
    PseudoBooleanPoly f(n);
    for (auto &[vars, c] : terms) {
        f.add_term(std::move(vars), c);
    }
    return f;
}

PseudoBooleanPoly read_polynomial_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open polynomial file " + path.string());
    }
    return parse_polynomial(in);
}

void write_polynomial(std::ostream &out, const PseudoBooleanPoly &f) {
    out << "n " << f.num_vars() << '\n';
    for (const auto &[vars, c] : f.terms()) {
        out << fmt::format("{}:", c);
        for (unsigned i : vars) {
            out << ' ' << i;
        }
        out << '\n';
    }
}

} // namespace vqa
