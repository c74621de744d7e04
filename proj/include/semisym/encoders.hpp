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

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "semisym/graph.hpp"
#include "semisym/qubo.hpp"

namespace semisym {

enum class ProblemKind {
  MaxClique,
  HamiltonCycles,
  GraphColoring,
  VertexCover,
  GraphIsomorphism,
};

std::string_view to_string(ProblemKind kind);
/// Accepts the snake_case names produced by to_string plus the short
/// aliases mc, hc, gc, vc, gi.
ProblemKind parse_problem_kind(std::string_view name);

/// Penalty weight A of the constraint terms. Always positive.
class PenaltyWeight {
 public:
  explicit PenaltyWeight(double a);
  double value() const noexcept { return a_; }

 private:
  double a_;
};

/// Row-major map from structured variables x_{r,c} to flat qubit indices.
///
///   MaxClique, VertexCover:  rows = |V|, cols = 1
///   HamiltonCycles:          rows = |V| (vertex), cols = |V| (position)
///   GraphColoring:           rows = |V| (vertex), cols = K (color)
///   GraphIsomorphism:        rows = |V1| (vertex of G1), cols = |V2|
class VariableLayout {
 public:
  VariableLayout(ProblemKind kind, std::size_t rows, std::size_t cols);

  ProblemKind kind() const noexcept { return kind_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return rows_ * cols_; }

  Index index(Index row, Index col) const;
  std::pair<Index, Index> unflatten(Index q) const;

 private:
  ProblemKind kind_;
  std::size_t rows_;
  std::size_t cols_;
};

/// sum_i -x_i + A * sum over complement edges of x_i x_j.
QuboMatrix max_clique_qubo(const Graph& g, PenaltyWeight a);

/// Variables x_{vertex,position} with 0-based positions. Reward -1 on every
/// variable; penalty A on each unordered pair of distinct variables that
/// share a vertex, share a position, or sit at cyclically adjacent positions
/// (including the wrap |V|-1 -> 0) on non-adjacent vertices.
QuboMatrix hamilton_cycle_qubo(const Graph& g, PenaltyWeight a);

/// Variables x_{vertex,color}. Reward -1 each; penalty A on pairs with the
/// same vertex, or with the same color on adjacent vertices.
QuboMatrix graph_coloring_qubo(const Graph& g, std::size_t k, PenaltyWeight a);

/// A * sum_{(u,v) in E} (1 - x_u)(1 - x_v) + sum_v x_v, expanded: offset
/// A|E|, diagonal 1 - A deg(v), coupling A per edge.
QuboMatrix vertex_cover_qubo(const Graph& g, PenaltyWeight a);

/// Variables x_{i,j} mapping vertex i of g1 to vertex j of g2. Reward -1
/// each; penalty A on pairs that map one vertex twice (i1 = i2), hit one
/// image twice (j1 = j2), or disagree on adjacency between the two graphs.
QuboMatrix graph_isomorphism_qubo(const Graph& g1, const Graph& g2,
                                  PenaltyWeight a);

}  // namespace semisym
