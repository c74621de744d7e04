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


#include "semisym/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "semisym/errors.hpp"
#include "semisym/graph.hpp"

namespace semisym {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void check_edges(std::size_t n, std::span<const Edge> edges) {
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw DimensionError("edge endpoint out of range");
    if (a == b) throw ParameterError("edge coloring does not accept self-loops");
  }
}

// at[x * colors + c] is the edge of color c at vertex x, or kNone.
class Palette {
 public:
  Palette(std::size_t n, std::span<const Edge> edges, std::size_t colors)
      : edges_(edges), colors_(colors), at_(n * colors, kNone),
        color_(edges.size(), kNone) {}

  std::size_t colors() const { return colors_; }
  std::size_t color(std::size_t e) const { return color_[e]; }
  std::size_t edge_at(Index x, std::size_t c) const { return at_[x * colors_ + c]; }
  bool is_free(Index x, std::size_t c) const { return edge_at(x, c) == kNone; }

  std::size_t first_free(Index x) const {
    for (std::size_t c = 0; c < colors_; ++c) {
      if (is_free(x, c)) return c;
    }
    return kNone;
  }

  Index other(std::size_t e, Index x) const {
    return edges_[e].first == x ? edges_[e].second : edges_[e].first;
  }

  void paint(std::size_t e, std::size_t c) {
    color_[e] = c;
    at_[edges_[e].first * colors_ + c] = e;
    at_[edges_[e].second * colors_ + c] = e;
  }

  void erase(std::size_t e) {
    const std::size_t c = color_[e];
    if (c == kNone) return;
    at_[edges_[e].first * colors_ + c] = kNone;
    at_[edges_[e].second * colors_ + c] = kNone;
    color_[e] = kNone;
  }

  // Edges of the maximal path from x alternating colors a, b, a, ...
  std::vector<std::size_t> alternating_path(Index x, std::size_t a,
                                            std::size_t b) const {
    std::vector<std::size_t> path;
    std::size_t c = a;
    for (std::size_t e = edge_at(x, c); e != kNone; e = edge_at(x, c)) {
      path.push_back(e);
      x = other(e, x);
      c = c == a ? b : a;
    }
    return path;
  }

  void swap_colors(const std::vector<std::size_t>& path, std::size_t a,
                   std::size_t b) {
    std::vector<std::size_t> old;
    old.reserve(path.size());
    for (std::size_t e : path) {
      old.push_back(color_[e]);
      erase(e);
    }
    for (std::size_t t = 0; t < path.size(); ++t) paint(path[t], old[t] == a ? b : a);
  }

  const std::vector<std::size_t>& all() const { return color_; }

 private:
  std::span<const Edge> edges_;
  std::size_t colors_;
  std::vector<std::size_t> at_;
  std::vector<std::size_t> color_;
};

// Recolors every edge of color >= limit into colors < limit. Each uncolored
// edge first tries a common free color, then an (a, b) Kempe swap from
// either endpoint; failing both it evicts a neighbouring edge.
bool squeeze(std::size_t n, std::span<const Edge> edges,
             std::vector<std::size_t>& colors, std::size_t limit,
             std::uint64_t seed) {
  Palette pal(n, edges, limit);
  std::vector<std::size_t> pending;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (colors[e] < limit) {
      pal.paint(e, colors[e]);
    } else {
      pending.push_back(e);
    }
  }
  Rng rng(seed);
  const std::size_t budget = 50 * edges.size() + 100;
  std::vector<std::size_t> free_u, free_v;
  for (std::size_t it = 0; !pending.empty() && it < budget; ++it) {
    const std::size_t e = pending.back();
    pending.pop_back();
    const auto [u, v] = edges[e];
    free_u.clear();
    free_v.clear();
    for (std::size_t c = 0; c < limit; ++c) {
      if (pal.is_free(u, c)) free_u.push_back(c);
      if (pal.is_free(v, c)) free_v.push_back(c);
    }
    bool placed = false;
    for (std::size_t c : free_u) {
      if (pal.is_free(v, c)) {
        pal.paint(e, c);
        placed = true;
        break;
      }
    }
    // Swap an (a, b) chain starting at p, which misses b. If the chain
    // avoids the other endpoint, a becomes free at both.
    for (int side = 0; side < 2 && !placed; ++side) {
      const Index p = side ? u : v;
      const Index q = side ? v : u;
      const auto& free_p = side ? free_u : free_v;
      const auto& free_q = side ? free_v : free_u;
      for (std::size_t a : free_q) {
        for (std::size_t b : free_p) {
          const auto path = pal.alternating_path(p, a, b);
          bool hits = false;
          Index x = p;
          for (std::size_t f : path) {
            x = pal.other(f, x);
            if (x == q) {
              hits = true;
              break;
            }
          }
          if (hits) continue;
          pal.swap_colors(path, a, b);
          pal.paint(e, a);
          placed = true;
          break;
        }
        if (placed) break;
      }
    }
    if (placed) continue;
    const bool at_u = rng.below(2) == 1;
    const auto& free_y = at_u ? free_u : free_v;
    const Index far = at_u ? v : u;
    const std::size_t c = free_y[rng.below(free_y.size())];
    const std::size_t evicted = pal.edge_at(far, c);
    pal.erase(evicted);
    pal.paint(e, c);
    pending.insert(pending.begin(), evicted);
  }
  if (!pending.empty()) return false;
  colors = pal.all();
  return true;
}

}  // namespace

std::size_t max_degree(std::size_t n, std::span<const Edge> edges) {
  check_edges(n, edges);
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::size_t> misra_gries_coloring(std::size_t n,
                                              std::span<const Edge> edges) {
  const std::size_t delta = max_degree(n, edges);
  Palette pal(n, edges, delta + 1);
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  std::vector<std::uint8_t> in_fan(n, 0);
  std::vector<Index> fan;
  std::vector<std::size_t> fan_edge;

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Index u = edges[e].first;
    // Maximal fan at u starting with the uncolored edge (u, v).
    fan.assign(1, edges[e].second);
    fan_edge.assign(1, e);
    in_fan[fan[0]] = 1;
    for (bool grown = true; grown;) {
      grown = false;
      for (std::size_t f : incident[u]) {
        const Index w = pal.other(f, u);
        const std::size_t c = pal.color(f);
        if (in_fan[w] || c == kNone || !pal.is_free(fan.back(), c)) continue;
        fan.push_back(w);
        fan_edge.push_back(f);
        in_fan[w] = 1;
        grown = true;
        break;
      }
    }
    const std::size_t c = pal.first_free(u);
    const std::size_t d = pal.first_free(fan.back());
    if (c != d) pal.swap_colors(pal.alternating_path(u, d, c), d, c);
    std::size_t w = 0;
    while (!pal.is_free(fan[w], d)) ++w;
    // Rotate the prefix fan[0..w] and close it with d.
    for (std::size_t t = 0; t < w; ++t) {
      const std::size_t next = pal.color(fan_edge[t + 1]);
      pal.erase(fan_edge[t + 1]);
      pal.paint(fan_edge[t], next);
    }
    pal.paint(fan_edge[w], d);
    for (Index x : fan) in_fan[x] = 0;
  }
  return pal.all();
}

std::vector<std::size_t> edge_coloring(std::size_t n, std::span<const Edge> edges,
                                       std::size_t restarts) {
  auto best = misra_gries_coloring(n, edges);
  const std::size_t delta = max_degree(n, edges);
  if (color_count(best) <= delta) return best;
  std::vector<std::size_t> perm(edges.size());
  std::vector<Edge> shuffled(edges.size());
  for (std::size_t attempt = 0; attempt < restarts; ++attempt) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    if (attempt > 0) {
      Rng rng(attempt);
      for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled[i] = edges[perm[i]];
    auto colors = misra_gries_coloring(n, shuffled);
    if (!squeeze(n, shuffled, colors, delta, 7 + attempt)) continue;
    for (std::size_t i = 0; i < perm.size(); ++i) best[perm[i]] = colors[i];
    break;
  }
  return best;
}

std::size_t color_count(std::span<const std::size_t> colors) {
  std::size_t top = 0;
  for (std::size_t c : colors) top = std::max(top, c + 1);
  return top;
}

bool is_proper_coloring(std::size_t n, std::span<const Edge> edges,
                        std::span<const std::size_t> colors) {
  if (colors.size() != edges.size()) return false;
  std::vector<std::vector<std::size_t>> seen(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    if (a >= n || b >= n || a == b || colors[e] == kNone) return false;
    for (Index x : {a, b}) {
      if (std::find(seen[x].begin(), seen[x].end(), colors[e]) != seen[x].end()) {
        return false;
      }
      seen[x].push_back(colors[e]);
    }
  }
  return true;
}

}  // namespace semisym
