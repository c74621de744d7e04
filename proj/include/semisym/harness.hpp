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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semisym/encoders.hpp"
#include "semisym/factoring.hpp"
#include "semisym/graph.hpp"
#include "semisym/qaoa.hpp"
#include "semisym/qubo.hpp"

namespace semisym {

/// One experiment configuration: problem, graph size and sampling seed.
struct ProblemSetting {
  ProblemKind problem = ProblemKind::MaxClique;
  std::size_t index = 0;  ///< column of the settings table (0, 1, 2)
  std::size_t v = 0;
  std::size_t e = 0;
  std::optional<std::size_t> k;  ///< colors, Graph Coloring only
  double penalty = 3.0;
  std::uint64_t seed = 0;
};

/// Throws ParameterError unless e <= v(v-1)/2 and k is present exactly for
/// Graph Coloring.
void validate(const ProblemSetting& setting);

/// Problem assigned to each row of the settings table.
using TableRowOrder = std::array<ProblemKind, 5>;
inline constexpr TableRowOrder kDefaultRowOrder{
    ProblemKind::MaxClique, ProblemKind::HamiltonCycles, ProblemKind::GraphColoring,
    ProblemKind::VertexCover, ProblemKind::GraphIsomorphism};

inline constexpr std::array<std::uint64_t, 4> kDefaultSeeds{0, 1, 2, 3};

/// The 15 table settings (three per problem), each instantiated once per
/// seed. Ordered by problem row, setting index, then seed.
std::vector<ProblemSetting> builtin_settings(
    std::span<const std::uint64_t> seeds = kDefaultSeeds,
    const TableRowOrder& row_order = kDefaultRowOrder);

/// Samples the graph(s) of a setting and encodes them.
QuboMatrix encode_setting(const ProblemSetting& setting,
                          PairMode pair_mode = PairMode::Isomorphic);

/// Penalty z of the factoring step: the sum of absolute coefficients of the
/// base matrix, or a fixed value.
struct ZMode {
  std::optional<double> fixed;

  static ZMode proposition() { return {}; }
  static ZMode value(double z) { return {z}; }
  double resolve(const QuboMatrix& base) const;
};

struct SweepOptions {
  CouplingOrder order = CouplingOrder::EdgeColored;
  PairMode pair_mode = PairMode::Isomorphic;
  FactoringOptions factoring;
  double gamma = 0.5;
  double beta = 0.25;
};

struct SweepRecord {
  std::string problem;
  std::size_t setting = 0;
  std::uint64_t seed = 0;
  std::size_t num_ancillas = 0;  ///< budget
  std::size_t p = 0;
  std::size_t qubits = 0;  ///< base qubits + ancillas actually used
  std::size_t couplings = 0;
  std::size_t cnots = 0;
  std::size_t depth = 0;

  bool operator==(const SweepRecord&) const = default;
};

/// One record per (budget in [0, max_ancillas], p). Budgets beyond the
/// available semi-symmetries repeat the saturated matrix.
std::vector<SweepRecord> sweep_qubo(const QuboMatrix& base, const std::string& problem,
                                    std::size_t setting, std::uint64_t seed,
                                    std::size_t max_ancillas,
                                    std::span<const std::size_t> p_values,
                                    const ZMode& z_mode, const SweepOptions& options = {});

std::vector<SweepRecord> run_sweep(const ProblemSetting& setting,
                                   std::size_t max_ancillas,
                                   std::span<const std::size_t> p_values,
                                   const ZMode& z_mode, const SweepOptions& options = {});

/// Runs independent settings on up to `jobs` threads. The result is sorted
/// by (problem, setting, seed, num_ancillas, p) whatever the completion order.
std::vector<SweepRecord> run_sweeps(std::span<const ProblemSetting> settings,
                                    std::size_t max_ancillas,
                                    std::span<const std::size_t> p_values,
                                    const ZMode& z_mode, const SweepOptions& options = {},
                                    std::size_t jobs = 1);

inline constexpr const char* kCsvHeader =
    "problem,setting,seed,num_ancillas,p,qubits,couplings,cnots,depth";

void write_csv(std::ostream& out, std::span<const SweepRecord> records);
std::vector<SweepRecord> read_csv(std::istream& in);

struct ParetoPoint {
  std::size_t ancillas = 0;
  std::size_t couplings = 0;

  auto operator<=>(const ParetoPoint&) const = default;
};

/// Non-dominated subset (both coordinates minimized), duplicates collapsed,
/// sorted by ancillas ascending.
std::vector<ParetoPoint> pareto_front(std::vector<ParetoPoint> points);

struct AggregateRow {
  std::string problem;
  std::size_t setting = 0;
  std::size_t num_ancillas = 0;
  std::size_t p = 0;
  std::size_t count = 0;
  double mean_couplings = 0.0;
  double std_couplings = 0.0;  ///< population standard deviation
  double mean_depth = 0.0;
  double std_depth = 0.0;
};

/// Mean and population standard deviation grouped by
/// (problem, setting, num_ancillas, p), in key order.
std::vector<AggregateRow> aggregate(std::span<const SweepRecord> records);

}  // namespace semisym
