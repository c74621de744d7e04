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


#include "doctest.h"
#include "semisym/coloring.hpp"
#include "semisym/errors.hpp"
#include "semisym/graph.hpp"

using namespace semisym;

namespace {

std::vector<Edge> edges_of(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

std::vector<Edge> petersen() {
  std::vector<Edge> e;
  for (Index i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return e;
}

}  // namespace

TEST_CASE("misra-gries stays within one extra color") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t v = 5 + seed % 20;
    const Graph g = sample_graph(v, (max_edges(v) * (1 + seed % 4)) / 5, seed);
    const auto edges = edges_of(g);
    const auto colors = misra_gries_coloring(v, edges);
    CHECK(is_proper_coloring(v, edges, colors));
    CHECK(color_count(colors) <= max_degree(v, edges) + 1);
  }
}

TEST_CASE("edge coloring reaches max degree on class one graphs") {
  // bipartite graphs always admit max-degree colorings
  std::vector<Edge> k34;
  for (Index a = 0; a < 3; ++a) {
    for (Index b = 3; b < 7; ++b) k34.emplace_back(a, b);
  }
  const auto c1 = edge_coloring(7, k34);
  CHECK(is_proper_coloring(7, k34, c1));
  CHECK(color_count(c1) == 4);

  std::vector<Edge> even_cycle;
  for (Index i = 0; i < 10; ++i) even_cycle.emplace_back(i, (i + 1) % 10);
  CHECK(color_count(edge_coloring(10, even_cycle)) == 2);

  // complete graphs on an even number of vertices are class one
  const auto k8 = edges_of(sample_graph(8, 28, 0));
  const auto c8 = edge_coloring(8, k8);
  CHECK(is_proper_coloring(8, k8, c8));
  CHECK(color_count(c8) == 7);
}

TEST_CASE("class two graphs need one more color") {
  const std::vector<Edge> triangle{{0, 1}, {1, 2}, {0, 2}};
  CHECK(color_count(edge_coloring(3, triangle)) == 3);
  const auto p = petersen();
  const auto colors = edge_coloring(10, p);
  CHECK(is_proper_coloring(10, p, colors));
  CHECK(max_degree(10, p) == 3);
  CHECK(color_count(colors) == 4);
}

TEST_CASE("edge coloring is deterministic and proper") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t v = 12 + seed;
    const auto edges = edges_of(sample_graph(v, 3 * v, seed));
    const auto a = edge_coloring(v, edges);
    CHECK(a == edge_coloring(v, edges));
    CHECK(is_proper_coloring(v, edges, a));
    const std::size_t delta = max_degree(v, edges);
    CHECK(color_count(a) >= delta);
    CHECK(color_count(a) <= delta + 1);
  }
}

TEST_CASE("coloring edge cases") {
  CHECK(edge_coloring(4, {}).empty());
  CHECK(max_degree(0, {}) == 0);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(edge_coloring(3, loop), ParameterError);
  const std::vector<Edge> far{{0, 3}};
  CHECK_THROWS_AS(edge_coloring(3, far), DimensionError);
  const std::vector<Edge> pair{{0, 1}, {1, 2}};
  const std::vector<std::size_t> clash{0, 0};
  CHECK_FALSE(is_proper_coloring(3, pair, clash));
}
