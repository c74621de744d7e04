// Copyright 2026 The semisym Authors
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
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semisym/qubo.hpp"

namespace semisym {

using Edge = std::pair<Index, Index>;

/// Simple undirected graph. Edges are stored normalized with first < second.
class Graph {
 public:
  explicit Graph(std::size_t num_vertices = 0);
  Graph(std::size_t num_vertices, std::span<const Edge> edges);
  Graph(std::size_t num_vertices, std::initializer_list<Edge> edges);

  std::size_t num_vertices() const noexcept { return v_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::set<Edge>& edges() const noexcept { return edges_; }

  /// Rejects self-loops, duplicates and out-of-range endpoints.
  void add_edge(Index u, Index w);
  bool has_edge(Index u, Index w) const;
  std::size_t degree(Index u) const;

  bool operator==(const Graph& other) const {
    return v_ == other.v_ && edges_ == other.edges_;
  }

 private:
  std::size_t v_;
  std::set<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
};

/// Portable pseudo-random source: std::mt19937_64 seeded directly with the
/// 64-bit seed (its output sequence is fixed by the C++ standard), with
/// bounded draws by rejection of the biased tail of the 64-bit range.
/// Standard library distributions are avoided because their algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Uniform real in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

/// Maximum edge count of a simple graph on v vertices.
std::uint64_t max_edges(std::size_t v);

/// Exactly v vertices and e edges, uniform over all such edge sets.
/// The v(v-1)/2 pairs are listed lexicographically and the first e slots of
/// a partial Fisher-Yates shuffle driven by Rng(seed) are kept.
Graph sample_graph(std::size_t v, std::size_t e, std::uint64_t seed);
Graph sample_graph(std::size_t v, std::size_t e, Rng& rng);

Graph complement(const Graph& g);

/// Relabels vertex u as perm[u].
Graph permute_vertices(const Graph& g, std::span<const Index> perm);

/// Uniform permutation of [0, v) by Fisher-Yates.
std::vector<Index> sample_permutation(std::size_t v, Rng& rng);

enum class PairMode {
  Isomorphic,   ///< second graph is a random relabeling of the first
  Independent,  ///< second graph sampled independently with the same (v, e)
};

/// Both graphs come from one Rng(seed) stream: first graph, then either the
/// permutation or the second graph.
std::pair<Graph, Graph> sample_graph_pair(std::size_t v, std::size_t e,
                                          std::uint64_t seed, PairMode mode);

/// "v e" header, then one "i j" line per edge with i < j, lexicographic.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace semisym
