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
#include "vqa/problems.hpp"

#include "vqa/error.hpp"
#include "vqa/guiding.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace vqa {

Graph::Graph(unsigned num_nodes) : n_(num_nodes) {}

Graph &Graph::add_edge(unsigned u, unsigned v, double weight) {
    if (u > v) {
        std::swap(u, v);
    }
    if (u < 1 || v > n_) {
        throw InvalidArgument(fmt::format("edge ({}, {}) has a node outside [1, {}]", u, v, n_));
    }
    if (u == v) {
        throw InvalidArgument(fmt::format("self-loop on node {}", u));
    }
    if (!std::isfinite(weight)) {
        throw InvalidArgument("edge weight must be finite");
    }
    for (const Edge &e : edges_) {
        if (e.u == u && e.v == v) {
            throw InvalidArgument(fmt::format("duplicate edge ({}, {})", u, v));
        }
    }
    edges_.push_back({u, v, weight});
    return *this;
}

std::vector<unsigned> Graph::degrees() const {
    std::vector<unsigned> deg(n_, 0);
    for (const Edge &e : edges_) {
        ++deg[e.u - 1];
        ++deg[e.v - 1];
    }
    return deg;
}

PseudoBooleanPoly maxcut_objective(const Graph &g) {
    // -w [x_i != x_j] = -w x_i - w x_j + 2w x_i x_j
    PseudoBooleanPoly f(g.num_nodes());
    for (const Edge &e : g.edges()) {
        f.add_term({e.u}, -e.weight);
        f.add_term({e.v}, -e.weight);
        f.add_term({e.u, e.v}, 2.0 * e.weight);
    }
    return f;
}

BruteForceResult brute_force_min(const PseudoBooleanPoly &f) {
    if (f.num_vars() > kMaxQubits) {
        throw SizeLimitError(fmt::format("brute force is capped at {} variables, got {}", kMaxQubits, f.num_vars()));
    }
    std::vector<std::uint64_t> masks;
    std::vector<double> coeffs;
    for (const auto &[vars, c] : f.terms()) {
        masks.push_back(subset_mask(vars, f.num_vars()));
        coeffs.push_back(c);
    }
    const std::uint64_t dim = std::uint64_t{1} << f.num_vars();
    constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;
    const std::int64_t chunks = static_cast<std::int64_t>((dim + kChunk - 1) / kChunk);

    auto value_at = [&](std::uint64_t x) {
        double acc = 0.0;
        for (std::size_t t = 0; t < masks.size(); ++t) {
            if ((x & masks[t]) == masks[t]) {
                acc += coeffs[t];
            }
        }
        return acc;
    };

    // Per-chunk minima, merged in chunk order so the result is thread-count independent.
    std::vector<double> chunk_min(static_cast<std::size_t>(chunks), std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(static) if (chunks > 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t end = std::min(dim, begin + kChunk);
        double best = std::numeric_limits<double>::infinity();
        for (std::uint64_t x = begin; x < end; ++x) {
            best = std::min(best, value_at(x));
        }
        chunk_min[static_cast<std::size_t>(c)] = best;
    }
    BruteForceResult result;
    result.f_star = *std::min_element(chunk_min.begin(), chunk_min.end());
    for (std::int64_t c = 0; c < chunks; ++c) {
        if (!within_optimal(chunk_min[static_cast<std::size_t>(c)], result.f_star)) {
            continue;
        }
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t end = std::min(dim, begin + kChunk);
        for (std::uint64_t x = begin; x < end; ++x) {
            if (within_optimal(value_at(x), result.f_star)) {
                result.argmin.push_back(x);
            }
        }
    }
    return result;
}

double approximation_ratio(double f_algo, double f_star) {
    if (f_star == 0.0) {
        throw InvalidArgument("approximation ratio is undefined for f* = 0; report the absolute gap instead");
    }
    return f_algo / f_star;
}

Graph random_regular_graph(unsigned n, unsigned d, std::uint64_t seed) {
    if ((static_cast<std::uint64_t>(n) * d) % 2 != 0) {
        throw InvalidArgument(fmt::format("no {}-regular graph on {} nodes: n*d is odd", d, n));
    }
    if (d >= n) {
        throw InvalidArgument(fmt::format("degree {} must be below the node count {}", d, n));
    }
    constexpr int kMaxAttempts = 100000;
    std::mt19937_64 rng(seed);
    std::vector<unsigned> points;
    for (unsigned v = 1; v <= n; ++v) {
        points.insert(points.end(), d, v);
    }
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        // Fisher-Yates with an explicit modulus draw; std::shuffle is not portable across libraries.
        for (std::size_t i = points.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng() % i);
            std::swap(points[i - 1], points[j]);
        }
        std::set<std::pair<unsigned, unsigned>> seen;
        bool ok = true;
        for (std::size_t i = 0; ok && i < points.size(); i += 2) {
            auto [a, b] = std::minmax(points[i], points[i + 1]);
            ok = a != b && seen.emplace(a, b).second;
        }
        if (!ok) {
            continue;
        }
        Graph g(n);
        for (const auto &[a, b] : seen) {
            g.add_edge(a, b);
        }
        return g;
    }
    throw Error(fmt::format("random_regular_graph: no simple graph after {} attempts", kMaxAttempts));
}

namespace {

std::string strip_comment(const std::string &line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string &s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

} // namespace

Graph parse_graph(std::istream &in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<Graph> graph;
    std::size_t expected_edges = 0;
    std::size_t read_edges = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_comment(raw);
        if (blank(line)) {
            continue;
        }
        std::istringstream ss(line);
        if (!graph) {
            long long n = -1;
            long long m = -1;
            std::string extra;
            if (!(ss >> n >> m) || (ss >> extra) || n < 1 || m < 0 || n > 4096) {
                throw InvalidArgument(fmt::format("graph line {}: expected header 'n m'", line_no));
            }
            graph.emplace(static_cast<unsigned>(n));
            expected_edges = static_cast<std::size_t>(m);
            continue;
        }
        long long u = 0;
        long long v = 0;
        double w = 1.0;
        if (!(ss >> u >> v) || u < 1 || v < 1) {
            throw InvalidArgument(fmt::format("graph line {}: expected 'u v [weight]'", line_no));
        }
        std::string tok;
        if (ss >> tok) {
            std::size_t used = 0;
            try {
                w = std::stod(tok, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            std::string extra;
            if (used != tok.size() || (ss >> extra)) {
                throw InvalidArgument(fmt::format("graph line {}: bad weight '{}'", line_no, tok));
            }
        }
        try {
            graph->add_edge(static_cast<unsigned>(u), static_cast<unsigned>(v), w);
        } catch (const InvalidArgument &e) {
            throw InvalidArgument(fmt::format("graph line {}: {}", line_no, e.what()));
        }
        ++read_edges;
    }
    if (!graph) {
        throw InvalidArgument("graph file is empty");
    }
    if (read_edges != expected_edges) {
        throw InvalidArgument(fmt::format("graph header declares {} edges, found {}", expected_edges, read_edges));
    }
    return *std::move(graph);
}

Graph read_graph_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open graph file " + path.string());
    }
    return parse_graph(in);
}

void write_graph(std::ostream &out, const Graph &g) {
    out << g.num_nodes() << ' ' << g.edges().size() << '\n';
    for (const Edge &e : g.edges()) {
        out << fmt::format("{} {} {}\n", e.u, e.v, e.weight);
    }
}

} // namespace vqa
