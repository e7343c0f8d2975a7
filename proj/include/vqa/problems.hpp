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
 * Benchmark problems and the exhaustive oracle.
 *
 * MAX-CUT is stored in minimization form, f(x) = -sum_{(i,j)} w_ij [x_i != x_j],
 * so every objective in the library is minimized. Reports convert back to
 * cut values where that reads better.
 *
 * Graph file format, 1-indexed, `#` starts a comment:
 *
 *     n m
 *     u v [weight]      m lines; weight defaults to 1
 */
#pragma once

#include "vqa/hamiltonian.hpp"
#include "vqa/statevector.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace vqa {

/// Goemans-Williamson guaranteed MAX-CUT ratio.
inline constexpr double kGoemansWilliamsonRatio = 0.87856;
/// QAOA p=1 lower bound on 3-regular MAX-CUT instances.
inline constexpr double kQaoaP1CubicBound = 0.6924;

struct Edge {
    unsigned u;
    unsigned v;
    double weight = 1.0;
    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Simple undirected graph, nodes 1..n, edges stored with u < v.
class Graph {
  public:
    explicit Graph(unsigned num_nodes);

    /// Accepts either endpoint order; rejects self-loops and duplicates.
    Graph &add_edge(unsigned u, unsigned v, double weight = 1.0);

    [[nodiscard]] unsigned num_nodes() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept { return edges_; }
    [[nodiscard]] std::vector<unsigned> degrees() const;

    friend bool operator==(const Graph &, const Graph &) = default;

  private:
    unsigned n_;
    std::vector<Edge> edges_;
};

PseudoBooleanPoly maxcut_objective(const Graph &g);

struct BruteForceResult {
    double f_star = 0.0;
    std::vector<BasisIndex> argmin; ///< ascending
};

/// Exhaustive minimum over {0,1}^n (n <= 26). Streams; does not tabulate f.
BruteForceResult brute_force_min(const PseudoBooleanPoly &f);

/// f_algo / f_star; throws InvalidArgument when f_star == 0.
double approximation_ratio(double f_algo, double f_star);

/// d-regular simple graph from the pairing model with rejection; deterministic per seed.
Graph random_regular_graph(unsigned n, unsigned d, std::uint64_t seed);

Graph parse_graph(std::istream &in);
Graph read_graph_file(const std::filesystem::path &path);
void write_graph(std::ostream &out, const Graph &g);

} // namespace vqa
