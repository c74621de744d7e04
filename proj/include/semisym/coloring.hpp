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
#include <span>
#include <utility>
#include <vector>

#include "semisym/graph.hpp"

namespace semisym {

std::size_t max_degree(std::size_t n, std::span<const Edge> edges);

/// Proper edge coloring with at most max_degree + 1 colors (Misra-Gries).
std::vector<std::size_t> misra_gries_coloring(std::size_t n,
                                              std::span<const Edge> edges);

/// Number of attempts, each from a differently shuffled edge order, spent
/// looking for a coloring with exactly max_degree colors.
inline constexpr std::size_t kColoringRestarts = 8;

/// Proper edge coloring. Starts from misra_gries_coloring and tries to empty
/// the extra color class with Kempe chain swaps; when every attempt fails the
/// max_degree + 1 coloring is returned. Deterministic.
std::vector<std::size_t> edge_coloring(std::size_t n, std::span<const Edge> edges,
                                       std::size_t restarts = kColoringRestarts);

std::size_t color_count(std::span<const std::size_t> colors);

bool is_proper_coloring(std::size_t n, std::span<const Edge> edges,
                        std::span<const std::size_t> colors);

}  // namespace semisym
