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

#include "semisym/graph.hpp"

#include <algorithm>
#include <sstream>

#include "file_util.hpp"
#include "semisym/errors.hpp"

namespace semisym {

Graph::Graph(std::size_t num_vertices)
    : v_(num_vertices), adjacency_(num_vertices * num_vertices, 0) {}

Graph::Graph(std::size_t num_vertices, std::span<const Edge> edges)
    : Graph(num_vertices) {
  for (const auto& [u, w] : edges) add_edge(u, w);
}

Graph::Graph(std::size_t num_vertices, std::initializer_list<Edge> edges)
    : Graph(num_vertices, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::add_edge(Index u, Index w) {
  if (u >= v_ || w >= v_) throw DimensionError("edge endpoint out of range");
  if (u == w) throw ParameterError("self-loops are not allowed");
  if (!edges_.insert({std::min(u, w), std::max(u, w)}).second) {
    throw ParameterError("duplicate edge (" + std::to_string(u) + ", " +
                         std::to_string(w) + ")");
  }
  adjacency_[u * v_ + w] = 1;
  adjacency_[w * v_ + u] = 1;
}

bool Graph::has_edge(Index u, Index w) const {
  if (u >= v_ || w >= v_) throw DimensionError("vertex out of range");
  return adjacency_[u * v_ + w] != 0;
}

std::size_t Graph::degree(Index u) const {
  if (u >= v_) throw DimensionError("vertex out of range");
  return static_cast<std::size_t>(
      std::count(adjacency_.begin() + u * v_, adjacency_.begin() + (u + 1) * v_, 1));
}

// ---------------------------------------------------------------------------

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ParameterError("Rng::below needs a positive bound");
  // Values below `threshold` would make the modulo biased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ParameterError("Rng::between with hi < lo");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(span == 0 ? engine_() : below(span));
}

double Rng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t max_edges(std::size_t v) {
  return static_cast<std::uint64_t>(v) * (v == 0 ? 0 : v - 1) / 2;
}

Graph sample_graph(std::size_t v, std::size_t e, std::uint64_t seed) {
  Rng rng(seed);
  return sample_graph(v, e, rng);
}

Graph sample_graph(std::size_t v, std::size_t e, Rng& rng) {
  if (e > max_edges(v)) {
    throw ParameterError("cannot place " + std::to_string(e) + " edges on " +
                         std::to_string(v) + " vertices");
  }
  std::vector<Edge> pairs;
  pairs.reserve(max_edges(v));
  for (Index i = 0; i < v; ++i) {
    for (Index j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
  }
  for (std::size_t t = 0; t < e; ++t) {
    const auto r = t + rng.below(pairs.size() - t);
    std::swap(pairs[t], pairs[r]);
  }
  pairs.resize(e);
  return Graph(v, pairs);
}

Graph complement(const Graph& g) {
  Graph out(g.num_vertices());
  for (Index i = 0; i < g.num_vertices(); ++i) {
    for (Index j = i + 1; j < g.num_vertices(); ++j) {
      if (!g.has_edge(i, j)) out.add_edge(i, j);
    }
  }
  return out;
}

Graph permute_vertices(const Graph& g, std::span<const Index> perm) {
  if (perm.size() != g.num_vertices()) {
    throw ParameterError("permutation size does not match vertex count");
  }
  std::vector<std::uint8_t> hit(perm.size(), 0);
  for (Index p : perm) {
    if (p >= perm.size() || hit[p]) throw ParameterError("not a permutation");
    hit[p] = 1;
  }
  Graph out(g.num_vertices());
  for (const auto& [u, w] : g.edges()) out.add_edge(perm[u], perm[w]);
  return out;
}

std::vector<Index> sample_permutation(std::size_t v, Rng& rng) {
  std::vector<Index> perm(v);
  for (Index i = 0; i < v; ++i) perm[i] = i;
  for (std::size_t t = 0; t + 1 < v; ++t) {
    std::swap(perm[t], perm[t + rng.below(v - t)]);
  }
  return perm;
}

std::pair<Graph, Graph> sample_graph_pair(std::size_t v, std::size_t e,
                                          std::uint64_t seed, PairMode mode) {
  Rng rng(seed);
  Graph first = sample_graph(v, e, rng);
  if (mode == PairMode::Independent) {
    Graph second = sample_graph(v, e, rng);
    return {std::move(first), std::move(second)};
  }
  const auto perm = sample_permutation(v, rng);
  Graph second = permute_vertices(first, perm);
  return {std::move(first), std::move(second)};
}

// ---------------------------------------------------------------------------

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, w] : g.edges()) out << u << ' ' << w << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long v = -1;
  long long e = -1;
  if (!(in >> v >> e) || v < 0 || e < 0) {
    throw FormatError("edge list must start with \"v e\"");
  }
  Graph g(static_cast<std::size_t>(v));
  for (long long t = 0; t < e; ++t) {
    long long a = -1;
    long long b = -1;
    if (!(in >> a >> b)) {
      throw FormatError("edge list ended after " + std::to_string(t) + " of " +
                        std::to_string(e) + " edges");
    }
    if (a < 0 || b < 0 || a >= v || b >= v) {
      throw FormatError("edge endpoint out of range");
    }
    try {
      g.add_edge(static_cast<Index>(a), static_cast<Index>(b));
    } catch (const ParameterError& err) {
      throw FormatError(err.what());
    }
  }
  std::string trailing;
  if (in >> trailing) throw FormatError("unexpected trailing content in edge list");
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  return parse_edge_list(detail::read_text_file(path));
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  detail::write_text_file(path, to_edge_list(g));
}

}  // namespace semisym
