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


#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracle.hpp"
#include "semisym/encoders.hpp"
#include "semisym/errors.hpp"

using namespace semisym;

namespace {

using Bits = std::vector<int>;

struct Scored {
  double reward = 0.0;  // linear part
  int penalties = 0;    // violated pair count
};

Scored max_clique_terms(const Graph& g, const Bits& x) {
  Scored s;
  const std::size_t v = g.num_vertices();
  for (Index u = 0; u < v; ++u) {
    s.reward -= x[u];
    for (Index w = u + 1; w < v; ++w) s.penalties += x[u] && x[w] && !g.has_edge(u, w);
  }
  return s;
}

// x[vertex * v + position]
Scored hamilton_terms(const Graph& g, const Bits& x) {
  Scored s;
  const std::size_t v = g.num_vertices();
  for (std::size_t a = 0; a < v * v; ++a) {
    s.reward -= x[a];
    for (std::size_t b = a + 1; b < v * v; ++b) {
      if (!x[a] || !x[b]) continue;
      const Index i = a / v, j = a % v, k = b / v, l = b % v;
      const bool adjacent_positions = (j + 1) % v == l || (l + 1) % v == j;
      s.penalties += i == k || j == l || (adjacent_positions && !g.has_edge(i, k));
    }
  }
  return s;
}

// x[vertex * k + color]
Scored coloring_terms(const Graph& g, std::size_t k, const Bits& x) {
  Scored s;
  const std::size_t n = g.num_vertices() * k;
  for (std::size_t a = 0; a < n; ++a) {
    s.reward -= x[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!x[a] || !x[b]) continue;
      const Index u = a / k, c = a % k, w = b / k, d = b % k;
      s.penalties += u == w || (c == d && g.has_edge(u, w));
    }
  }
  return s;
}

// Reward is the cover size here, penalties count uncovered edges.
Scored cover_terms(const Graph& g, const Bits& x) {
  Scored s;
  for (Index u = 0; u < g.num_vertices(); ++u) s.reward += x[u];
  for (const auto& [u, w] : g.edges()) s.penalties += !x[u] && !x[w];
  return s;
}

// x[i * v + j]: vertex i of g1 maps to vertex j of g2.
Scored isomorphism_terms(const Graph& g1, const Graph& g2, const Bits& x) {
  Scored s;
  const std::size_t v = g1.num_vertices();
  for (std::size_t a = 0; a < v * v; ++a) {
    s.reward -= x[a];
    for (std::size_t b = a + 1; b < v * v; ++b) {
      if (!x[a] || !x[b]) continue;
      const Index i1 = a / v, j1 = a % v, i2 = b / v, j2 = b % v;
      const bool mismatch = i1 != i2 && j1 != j2 && g1.has_edge(i1, i2) != g2.has_edge(j1, j2);
      s.penalties += i1 == i2 || j1 == j2 || mismatch;
    }
  }
  return s;
}

template <class Terms>
void check_against_oracle(const QuboMatrix& q, double a, Terms terms) {
  const std::size_t n = q.n();
  REQUIRE(n <= 12);
  double best_valid = INFINITY;
  std::vector<double> energies(std::size_t{1} << n);
  std::vector<int> valid(energies.size());
  for (std::uint64_t m = 0; m < energies.size(); ++m) {
    const Bits x = oracle::bits_of(n, m);
    const Scored s = terms(x);
    const double e = energy(q, Solution::from_mask(n, m));
    CHECK(e == s.reward + a * s.penalties);
    energies[m] = e;
    valid[m] = s.penalties == 0;
    if (valid[m]) best_valid = std::min(best_valid, e);
  }
  // With a above the variable count every violation costs more than any
  // reward it can collect.
  if (a > static_cast<double>(n)) {
    for (std::uint64_t m = 0; m < energies.size(); ++m) {
      if (!valid[m]) CHECK(energies[m] > best_valid);
    }
  }
}

void check_well_formed(const QuboMatrix& q) {
  for (const auto& [k, v] : q.entries()) {
    CHECK(k.first <= k.second);
    CHECK(k.second < q.n());
    CHECK(v != 0.0);
    CHECK(std::isfinite(v));
  }
}

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("max clique examples") {
  CHECK(max_clique_qubo(oracle::example_graph(), PenaltyWeight(3)) == oracle::example_qubo());
  const QuboMatrix one = max_clique_qubo(Graph(1), PenaltyWeight(3));
  CHECK(one.n() == 1);
  CHECK(one.get(0, 0) == -1.0);
  const QuboMatrix k3 = max_clique_qubo(triangle(), PenaltyWeight(3));
  CHECK(coupling_count(k3) == 0);
  for (Index i = 0; i < 3; ++i) CHECK(k3.get(i, i) == -1.0);
  CHECK(spectrum(k3)[0].solution.mask() == 0b111);
  CHECK(spectrum(k3)[0].energy == -3.0);
}

TEST_CASE("hamilton cycle examples") {
  const QuboMatrix k3 = hamilton_cycle_qubo(triangle(), PenaltyWeight(3));
  CHECK(oracle::brute_min(k3) == -3.0);
  const auto best = oracle::brute_argmin(k3);
  CHECK(best.size() == 6);
  for (std::uint64_t m : best) {
    // one position per vertex and one vertex per position
    const Bits x = oracle::bits_of(9, m);
    for (Index r = 0; r < 3; ++r) {
      CHECK(x[r * 3] + x[r * 3 + 1] + x[r * 3 + 2] == 1);
      CHECK(x[r] + x[3 + r] + x[6 + r] == 1);
    }
  }
  CHECK(oracle::brute_min(hamilton_cycle_qubo(path3(), PenaltyWeight(3))) > -3.0);

  const Graph g = sample_graph(5, 6, 2);
  const QuboMatrix q = hamilton_cycle_qubo(g, PenaltyWeight(3));
  CHECK(q.n() == 25);
  std::size_t diagonal = 0;
  for (const auto& [k, v] : q.entries()) {
    if (k.first == k.second) {
      ++diagonal;
      CHECK(v == -1.0);
    }
  }
  CHECK(diagonal == 25);
  CHECK_THROWS_AS(hamilton_cycle_qubo(Graph(2, {{0, 1}}), PenaltyWeight(3)), ParameterError);
}

TEST_CASE("graph coloring examples") {
  const QuboMatrix one = graph_coloring_qubo(Graph(1), 1, PenaltyWeight(3));
  CHECK(one.n() == 1);
  CHECK(one.get(0, 0) == -1.0);

  const QuboMatrix edge = graph_coloring_qubo(Graph(2, {{0, 1}}), 2, PenaltyWeight(3));
  CHECK(oracle::brute_min(edge) == -2.0);
  // x = (v0c0, v0c1, v1c0, v1c1): the two proper colorings
  CHECK(oracle::brute_argmin(edge) == std::vector<std::uint64_t>{0b0110, 0b1001});

  const QuboMatrix two = graph_coloring_qubo(Graph(1), 2, PenaltyWeight(3));
  CHECK(two.entries().size() == 3);
  CHECK(two.get(0, 1) == 3.0);
  CHECK(oracle::brute_min(two) == -1.0);
  CHECK_THROWS_AS(graph_coloring_qubo(Graph(1), 0, PenaltyWeight(3)), ParameterError);
}

TEST_CASE("vertex cover examples") {
  const QuboMatrix empty = vertex_cover_qubo(Graph(3), PenaltyWeight(3));
  CHECK(empty.offset() == 0.0);
  for (Index i = 0; i < 3; ++i) CHECK(empty.get(i, i) == 1.0);
  CHECK(oracle::brute_argmin(empty) == std::vector<std::uint64_t>{0});
  CHECK(oracle::brute_min(empty) == 0.0);

  const QuboMatrix edge = vertex_cover_qubo(Graph(2, {{0, 1}}), PenaltyWeight(2));
  CHECK(edge.offset() == 2.0);
  CHECK(edge.get(0, 0) == -1.0);
  CHECK(edge.get(1, 1) == -1.0);
  CHECK(edge.get(0, 1) == 2.0);
  CHECK(oracle::brute_min(edge) == 1.0);
  CHECK(oracle::brute_argmin(edge) == std::vector<std::uint64_t>{0b01, 0b10});

  CHECK(oracle::brute_min(vertex_cover_qubo(triangle(), PenaltyWeight(2))) == 2.0);
}

TEST_CASE("graph isomorphism examples") {
  const QuboMatrix one = graph_isomorphism_qubo(Graph(1), Graph(1), PenaltyWeight(3));
  CHECK(one.n() == 1);
  CHECK(one.get(0, 0) == -1.0);

  const QuboMatrix same = graph_isomorphism_qubo(triangle(), triangle(), PenaltyWeight(3));
  CHECK(oracle::brute_min(same) == -3.0);
  const auto best = oracle::brute_argmin(same);
  CHECK(best.size() == 6);
  std::vector<Index> perm{0, 1, 2};
  do {
    std::uint64_t m = 0;
    for (Index i = 0; i < 3; ++i) m |= std::uint64_t{1} << (i * 3 + perm[i]);
    CHECK(std::find(best.begin(), best.end(), m) != best.end());
  } while (std::next_permutation(perm.begin(), perm.end()));

  const QuboMatrix differ = graph_isomorphism_qubo(triangle(), path3(), PenaltyWeight(3));
  CHECK(oracle::brute_min(differ) > -3.0);

  // one vertex of g1 mapped twice is penalized
  CHECK(same.get(0, 1) == 3.0);
  CHECK_THROWS_AS(graph_isomorphism_qubo(Graph(3), Graph(4), PenaltyWeight(3)),
                  ParameterError);
}

TEST_CASE("encoders agree with direct objective evaluation") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    for (double a : {3.0, 13.0}) {
      const Graph g10 = sample_graph(10, 17, seed);
      const QuboMatrix mc = max_clique_qubo(g10, PenaltyWeight(a));
      check_well_formed(mc);
      check_against_oracle(mc, a, [&](const Bits& x) { return max_clique_terms(g10, x); });

      const QuboMatrix vc = vertex_cover_qubo(g10, PenaltyWeight(a));
      check_well_formed(vc);
      check_against_oracle(vc, a, [&](const Bits& x) { return cover_terms(g10, x); });

      const Graph g3 = sample_graph(3, seed % 4, seed);
      const QuboMatrix hc = hamilton_cycle_qubo(g3, PenaltyWeight(a));
      check_well_formed(hc);
      check_against_oracle(hc, a, [&](const Bits& x) { return hamilton_terms(g3, x); });

      const Graph g4 = sample_graph(4, 2 + seed, seed);
      const QuboMatrix gc = graph_coloring_qubo(g4, 3, PenaltyWeight(a));
      check_well_formed(gc);
      check_against_oracle(gc, a, [&](const Bits& x) { return coloring_terms(g4, 3, x); });

      const auto [h1, h2] = sample_graph_pair(3, 1 + seed % 3, seed,
                                              seed % 2 ? PairMode::Isomorphic
                                                       : PairMode::Independent);
      const QuboMatrix gi = graph_isomorphism_qubo(h1, h2, PenaltyWeight(a));
      check_well_formed(gi);
      check_against_oracle(gi, a, [&](const Bits& x) { return isomorphism_terms(h1, h2, x); });
    }
  }
}

TEST_CASE("hamilton cycles on four vertices") {
  // 16 variables is above the brute-force range, so check the structured
  // assignments directly.
  const Graph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const QuboMatrix q = hamilton_cycle_qubo(cycle, PenaltyWeight(3));
  std::vector<Index> order{0, 1, 2, 3};
  int tours = 0;
  do {
    Solution x(16);
    for (Index pos = 0; pos < 4; ++pos) x.set(order[pos] * 4 + pos);
    const Bits bits = oracle::bits_of(16, x.mask());
    const Scored s = hamilton_terms(cycle, bits);
    CHECK(energy(q, x) == s.reward + 3 * s.penalties);
    if (s.penalties == 0) {
      ++tours;
      CHECK(energy(q, x) == -4.0);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(tours == 8);  // 4 rotations x 2 directions
}

TEST_CASE("valid objects score their objective") {
  const Graph g = sample_graph(9, 20, 6);
  const QuboMatrix mc = max_clique_qubo(g, PenaltyWeight(3));
  const QuboMatrix vc = vertex_cover_qubo(g, PenaltyWeight(3));
  for (std::uint64_t m = 0; m < 512; ++m) {
    const Bits x = oracle::bits_of(9, m);
    const int size = std::accumulate(x.begin(), x.end(), 0);
    bool clique = true, cover = true;
    for (Index u = 0; u < 9; ++u) {
      for (Index w = u + 1; w < 9; ++w) {
        if (x[u] && x[w] && !g.has_edge(u, w)) clique = false;
        if (g.has_edge(u, w) && !x[u] && !x[w]) cover = false;
      }
    }
    if (clique) CHECK(energy(mc, Solution::from_mask(9, m)) == -size);
    if (cover) CHECK(energy(vc, Solution::from_mask(9, m)) == size);
  }

  // proper colorings of a 4-cycle with 3 colors
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const QuboMatrix gc = graph_coloring_qubo(c4, 3, PenaltyWeight(3));
  int proper = 0;
  for (int code = 0; code < 81; ++code) {
    int rest = code;
    std::vector<int> color(4);
    for (auto& c : color) {
      c = rest % 3;
      rest /= 3;
    }
    bool ok = true;
    for (const auto& [u, w] : c4.edges()) ok = ok && color[u] != color[w];
    if (!ok) continue;
    ++proper;
    Solution x(12);
    for (Index u = 0; u < 4; ++u) x.set(u * 3 + color[u]);
    CHECK(energy(gc, x) == -4.0);
  }
  CHECK(proper == 18);

  // every isomorphism of a graph onto a relabeled copy
  const auto [g1, g2] = sample_graph_pair(3, 2, 9, PairMode::Isomorphic);
  const QuboMatrix gi = graph_isomorphism_qubo(g1, g2, PenaltyWeight(3));
  std::vector<Index> perm{0, 1, 2};
  do {
    bool iso = true;
    for (Index a = 0; a < 3; ++a) {
      for (Index b = a + 1; b < 3; ++b) iso = iso && g1.has_edge(a, b) == g2.has_edge(perm[a], perm[b]);
    }
    if (!iso) continue;
    Solution x(9);
    for (Index i = 0; i < 3; ++i) x.set(i * 3 + perm[i]);
    CHECK(energy(gi, x) == -3.0);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("variable layout") {
  const VariableLayout layout(ProblemKind::GraphColoring, 5, 3);
  CHECK(layout.size() == 15);
  std::vector<int> hit(15, 0);
  for (Index r = 0; r < 5; ++r) {
    for (Index c = 0; c < 3; ++c) {
      const Index q = layout.index(r, c);
      REQUIRE(q < 15);
      ++hit[q];
      CHECK(layout.unflatten(q) == std::pair<Index, Index>{r, c});
    }
  }
  CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(layout.index(5, 0), DimensionError);
  CHECK_THROWS_AS(layout.unflatten(15), DimensionError);
}

TEST_CASE("penalty weight and problem names") {
  CHECK_THROWS_AS(PenaltyWeight(0), ParameterError);
  CHECK_THROWS_AS(PenaltyWeight(-1), ParameterError);
  CHECK_THROWS_AS(PenaltyWeight(NAN), ParameterError);
  for (auto kind : {ProblemKind::MaxClique, ProblemKind::HamiltonCycles,
                    ProblemKind::GraphColoring, ProblemKind::VertexCover,
                    ProblemKind::GraphIsomorphism}) {
    CHECK(parse_problem_kind(to_string(kind)) == kind);
  }
  CHECK(parse_problem_kind("gi") == ProblemKind::GraphIsomorphism);
  CHECK(parse_problem_kind("mc") == ProblemKind::MaxClique);
  CHECK_THROWS_AS(parse_problem_kind("max_cut"), ParameterError);
}
