// Copyright 2026 The fqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "fqa/pauli.hpp"

namespace fqa {

struct Edge {
    std::uint32_t u;
    std::uint32_t v;
    double weight = 1.0;

    bool operator==(const Edge &) const = default;
};

/// Undirected weighted graph without self loops or parallel edges.
class Graph {
  public:
    /// Throws InvalidArgument if any edge is out of range, a loop, a
    /// duplicate, or carries a non-finite weight.
    Graph(std::size_t num_vertices, std::vector<Edge> edges);

    [[nodiscard]] std::size_t num_vertices() const noexcept { return num_vertices_; }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept { return edges_; }
    [[nodiscard]] double total_weight() const noexcept;

    /// Weight of edges crossing the partition encoded by the bits of `z`.
    [[nodiscard]] double cut_value(std::uint64_t z) const noexcept;

    bool operator==(const Graph &) const = default;

  private:
    std::size_t num_vertices_;
    std::vector<Edge> edges_;
};

struct AnnniParams {
    std::size_t length;
    double kappa;
    double g;
    double j_coupling = 1.0;
};

/// -sum_{(u,v)} w/2 (1 - Z_u Z_v): one term per undirected edge.
[[nodiscard]] Observable maxcut_hamiltonian(const Graph &g);

/// -J sum_j (Z_j Z_{j+1} - kappa Y_j Y_{j+2} + g X_j) on a periodic chain.
[[nodiscard]] Observable annni_hamiltonian(const AnnniParams &p);

/// sum_j X_j.
[[nodiscard]] Observable driver_hamiltonian(std::size_t num_qubits);

/**
 * Parses the edge-list format: the first non-comment line holds the vertex
 * count and every following non-comment line holds `u v w`. `#` starts a
 * comment that runs to end of line. Errors carry the 1-based line number.
 */
[[nodiscard]] Graph load_graph(std::istream &in);
[[nodiscard]] Graph load_graph_file(const std::string &path);

/// Writes `g` in the format accepted by load_graph.
void write_graph(std::ostream &out, const Graph &g);

/// Random simple `degree`-regular unweighted graph, reproducible from `seed`
/// on every platform (the raw mt19937_64 stream is standardized; no
/// std::*_distribution is involved).
[[nodiscard]] Graph random_regular_graph(std::size_t num_vertices, std::size_t degree,
                                         std::uint64_t seed);

} // namespace fqa
