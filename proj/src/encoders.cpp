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

#include "semisym/encoders.hpp"

#include <array>
#include <cmath>

#include "semisym/errors.hpp"

namespace semisym {

namespace {

struct KindName {
  ProblemKind kind;
  std::string_view name;
  std::string_view alias;
};

constexpr std::array<KindName, 5> kKindNames{{
    {ProblemKind::MaxClique, "max_clique", "mc"},
    {ProblemKind::HamiltonCycles, "hamilton_cycles", "hc"},
    {ProblemKind::GraphColoring, "graph_coloring", "gc"},
    {ProblemKind::VertexCover, "vertex_cover", "vc"},
    {ProblemKind::GraphIsomorphism, "graph_isomorphism", "gi"},
}};

// Adds the -1 reward on every variable and A on every unordered pair of
// distinct variables accepted by `penalized`.
template <typename Predicate>
QuboMatrix reward_and_pair_penalty(std::size_t n, double a, Predicate penalized) {
  QuboMatrix q(n);
  for (Index u = 0; u < n; ++u) {
    q.set(u, u, -1.0);
    for (Index w = u + 1; w < n; ++w) {
      if (penalized(u, w)) q.set(u, w, a);
    }
  }
  return q;
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

ProblemKind parse_problem_kind(std::string_view name) {
  for (const auto& k : kKindNames) {
    if (k.name == name || k.alias == name) return k.kind;
  }
  throw ParameterError("unknown problem '" + std::string(name) + "'");
}

PenaltyWeight::PenaltyWeight(double a) : a_(a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ParameterError("penalty weight must be positive and finite");
  }
}

VariableLayout::VariableLayout(ProblemKind kind, std::size_t rows, std::size_t cols)
    : kind_(kind), rows_(rows), cols_(cols) {}

Index VariableLayout::index(Index row, Index col) const {
  if (row >= rows_ || col >= cols_) throw DimensionError("variable out of layout");
  return row * cols_ + col;
}

std::pair<Index, Index> VariableLayout::unflatten(Index q) const {
  if (q >= size()) throw DimensionError("qubit out of layout");
  return {q / cols_, q % cols_};
}

QuboMatrix max_clique_qubo(const Graph& g, PenaltyWeight a) {
  const auto n = g.num_vertices();
  return reward_and_pair_penalty(n, a.value(), [&](Index u, Index w) {
    return !g.has_edge(u, w);
  });
}

QuboMatrix hamilton_cycle_qubo(const Graph& g, PenaltyWeight a) {
  const auto v = g.num_vertices();
  if (v < 3) throw ParameterError("Hamilton cycles need at least 3 vertices");
  const VariableLayout layout(ProblemKind::HamiltonCycles, v, v);
  auto adjacent_positions = [v](Index j, Index l) {
    return (j + 1) % v == l || (l + 1) % v == j;
  };
  return reward_and_pair_penalty(layout.size(), a.value(), [&](Index s, Index t) {
    const auto [i, j] = layout.unflatten(s);
    const auto [k, l] = layout.unflatten(t);
    if (i == k || j == l) return true;
    return adjacent_positions(j, l) && !g.has_edge(i, k);
  });
}

QuboMatrix graph_coloring_qubo(const Graph& g, std::size_t k, PenaltyWeight a) {
  if (k < 1) throw ParameterError("graph coloring needs at least one color");
  const VariableLayout layout(ProblemKind::GraphColoring, g.num_vertices(), k);
  return reward_and_pair_penalty(layout.size(), a.value(), [&](Index s, Index t) {
    const auto [i, c1] = layout.unflatten(s);
    const auto [j, c2] = layout.unflatten(t);
    return i == j || (c1 == c2 && g.has_edge(i, j));
  });
}

QuboMatrix vertex_cover_qubo(const Graph& g, PenaltyWeight a) {
  const double weight = a.value();
  QuboMatrix q(g.num_vertices(), weight * static_cast<double>(g.num_edges()));
  for (Index u = 0; u < g.num_vertices(); ++u) {
    q.set(u, u, 1.0 - weight * static_cast<double>(g.degree(u)));
  }
  for (const auto& [u, w] : g.edges()) q.set(u, w, weight);
  return q;
}

QuboMatrix graph_isomorphism_qubo(const Graph& g1, const Graph& g2,
                                  PenaltyWeight a) {
  const auto v = g1.num_vertices();
  if (g2.num_vertices() != v) {
    throw ParameterError("graph isomorphism needs equal vertex counts");
  }
  const VariableLayout layout(ProblemKind::GraphIsomorphism, v, v);
  return reward_and_pair_penalty(layout.size(), a.value(), [&](Index s, Index t) {
    const auto [i1, j1] = layout.unflatten(s);
    const auto [i2, j2] = layout.unflatten(t);
    if (i1 == i2 || j1 == j2) return true;
    return g1.has_edge(i1, i2) != g2.has_edge(j1, j2);
  });
}

}  // namespace semisym
