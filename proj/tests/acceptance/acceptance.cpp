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


// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "oracle.hpp"
#include "semisym/encoders.hpp"
#include "semisym/factoring.hpp"
#include "semisym/harness.hpp"
#include "semisym/qaoa.hpp"

using namespace semisym;

namespace {

// Pinned limits.
constexpr double kTableSeconds = 1.0;
constexpr double kPropositionSeconds = 120.0;
constexpr double kSpectrumSeconds = 1.0;
constexpr double kSweepSeconds = 600.0;
constexpr double kMinCouplingReduction = 0.25;
constexpr double kMinDepthReduction = 0.15;
constexpr double kPhaseTolerance = 1e-9;
constexpr double kMaxScalingRatio = 10.0;
constexpr double kMaxLargeSeconds = 30.0;
constexpr std::size_t kRandomQubos = 60;
constexpr std::size_t kPhaseQubos = 20;
constexpr std::size_t kSweepBudget = 29;
constexpr std::size_t kTimingRepeats = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

Outcome worked_example_round_trip() {
  const auto start = Clock::now();
  const QuboMatrix left = max_clique_qubo(oracle::example_graph(), PenaltyWeight(3));
  const auto result = factor_out(left, 1, 3);
  const double t = seconds_since(start);
  const bool left_ok = left == oracle::example_qubo();
  const bool right_ok = result.matrix == oracle::example_factored();
  const bool counts = coupling_count(left) == 9 && coupling_count(result.matrix) == 8 &&
                      left.n() == 6 && result.matrix.n() == 7;
  return {left_ok && right_ok && counts && t < kTableSeconds,
          format("left %s, right %s, couplings %zu -> %zu, qubits %zu -> %zu, %.4f s",
                 left_ok ? "exact" : "MISMATCH", right_ok ? "exact" : "MISMATCH",
                 coupling_count(left), coupling_count(result.matrix), left.n(),
                 result.matrix.n(), t)};
}

Outcome preservation_suite() {
  const auto start = Clock::now();
  std::vector<QuboMatrix> instances;
  std::mt19937_64 gen(20240601);
  for (std::size_t r = 0; r < kRandomQubos; ++r) {
    const std::size_t n = 3 + r % 8;
    instances.push_back(r % 2 ? oracle::random_qubo(n, gen) : oracle::planted_qubo(n, gen));
  }
  const std::size_t random_count = instances.size();
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const PenaltyWeight a(3);
    instances.push_back(max_clique_qubo(sample_graph(12, 20 + 8 * seed, seed), a));
    instances.push_back(vertex_cover_qubo(sample_graph(12, 10 + 8 * seed, seed), a));
    instances.push_back(hamilton_cycle_qubo(sample_graph(3, 1 + seed % 3, seed), a));
    instances.push_back(graph_coloring_qubo(sample_graph(4, 2 + seed, seed), 3, a));
    const auto [g1, g2] = sample_graph_pair(3, 1 + seed % 3, seed,
                                            seed % 2 ? PairMode::Independent : PairMode::Isomorphic);
    instances.push_back(graph_isomorphism_qubo(g1, g2, a));
  }
  std::size_t failures = 0, factored = 0, steps = 0;
  for (const QuboMatrix& q : instances) {
    const auto result = factor_out(q, kSweepBudget, default_z(q));
    factored += !result.report.steps.empty();
    steps += result.report.steps.size();
    if (!verify_equivalence(q, result.matrix, result.report).all()) ++failures;
  }
  const double t = seconds_since(start);
  return {failures == 0 && t < kPropositionSeconds,
          format("%zu instances (%zu random, %zu encoded), %zu factored with %zu ancillas, "
                 "%zu failures, %.2f s",
                 instances.size(), random_count, instances.size() - random_count, factored,
                 steps, failures, t)};
}

Outcome spectrum_study() {
  const auto start = Clock::now();
  const QuboMatrix left = oracle::example_qubo();
  const auto strong = factor_out(left, 1, 9).matrix;
  const auto weak = factor_out(left, 1, 3).matrix;
  std::size_t strong_ok = 0, weak_decreased = 0;
  double left_min = INFINITY, weak_min = INFINITY;
  for (std::uint64_t m = 0; m < 64; ++m) {
    const Solution x = Solution::from_mask(6, m);
    const double e = energy(left, x);
    strong_ok += min_energy_over_ancillas(strong, 6, x) >= e;
    const double w = min_energy_over_ancillas(weak, 6, x);
    const bool invalid = x[1] && x[4];
    weak_decreased += invalid && w < e;
    left_min = std::min(left_min, e);
    weak_min = std::min(weak_min, w);
  }
  const double t = seconds_since(start);
  const bool exact = left.is_integral() && strong.is_integral() && weak.is_integral();
  const bool pass = strong_ok == 64 && weak_decreased > 0 && left_min == -3.0 &&
                    weak_min == -3.0 && exact && t < kSpectrumSeconds;
  return {pass, format("z=9: %zu/64 not decreased; z=3: %zu invalid decreased, minimum %g "
                       "(original %g); %.4f s",
                       strong_ok, weak_decreased, weak_min, left_min, t)};
}

struct SweepData {
  std::vector<SweepRecord> colored;
  std::vector<SweepRecord> ascending;
  double seconds = 0.0;
};

SweepData run_full_sweep() {
  const auto start = Clock::now();
  SweepData data;
  const auto settings = builtin_settings();
  const std::vector<std::size_t> layers{1, 2, 3};
  SweepOptions options;
  data.colored = run_sweeps(settings, kSweepBudget, layers, ZMode::proposition(), options);
  data.seconds = seconds_since(start);
  options.order = CouplingOrder::Ascending;
  data.ascending = run_sweeps(settings, kSweepBudget, layers, ZMode::proposition(), options);
  return data;
}

Outcome cnot_law(const SweepData& data) {
  std::size_t circuits = 0, exceptions = 0;
  for (const auto* records : {&data.colored, &data.ascending}) {
    for (const auto& r : *records) {
      ++circuits;
      exceptions += r.cnots != 2 * r.couplings * r.p;
    }
  }
  return {exceptions == 0 && circuits > 0,
          format("%zu circuits, %zu exceptions", circuits, exceptions)};
}

Outcome sweep_trends(const SweepData& data) {
  using Series = std::tuple<std::string, std::size_t, std::uint64_t, std::size_t>;
  std::map<Series, std::vector<const SweepRecord*>> series;
  for (const auto& r : data.colored) series[{r.problem, r.setting, r.seed, r.p}].push_back(&r);
  std::size_t coupling_rises = 0, depth_rises = 0;
  for (auto& [key, rows] : series) {
    std::sort(rows.begin(), rows.end(),
              [](auto* a, auto* b) { return a->num_ancillas < b->num_ancillas; });
    for (std::size_t t = 1; t < rows.size(); ++t) {
      if (rows[t]->couplings > rows[t - 1]->couplings) {
        ++coupling_rises;
        std::printf("  couplings rise: %s %zu seed %llu p=%zu budget %zu\n",
                    std::get<0>(key).c_str(), std::get<1>(key),
                    static_cast<unsigned long long>(std::get<2>(key)), std::get<3>(key),
                    rows[t]->num_ancillas);
      }
      if (rows[t]->depth > rows[t - 1]->depth) {
        ++depth_rises;
        std::printf("  depth rise: %s %zu seed %llu p=%zu budget %zu: %zu -> %zu\n",
                    std::get<0>(key).c_str(), std::get<1>(key),
                    static_cast<unsigned long long>(std::get<2>(key)), std::get<3>(key),
                    rows[t]->num_ancillas, rows[t - 1]->depth, rows[t]->depth);
      }
    }
  }

  // Percentage table over seeds: budget 0 vs the largest budget.
  const auto rows = aggregate(data.colored);
  std::map<std::tuple<std::string, std::size_t, std::size_t, std::size_t>, const AggregateRow*> at;
  for (const auto& row : rows) at[{row.problem, row.setting, row.num_ancillas, row.p}] = &row;
  std::printf("  %-18s %3s %9s %9s %7s %8s %8s %8s\n", "problem", "set", "couplings",
              "budget29", "reduce", "depth p1", "depth p2", "depth p3");
  double hc_couplings = 0.0, hc_depth = 0.0;
  for (const auto& row : rows) {
    if (row.num_ancillas != 0 || row.p != 1) continue;
    const auto key = [&](std::size_t budget, std::size_t p) {
      return at.at({row.problem, row.setting, budget, p});
    };
    const double c0 = key(0, 1)->mean_couplings;
    const double c1 = key(kSweepBudget, 1)->mean_couplings;
    double depth_cut[3];
    for (std::size_t p = 1; p <= 3; ++p) {
      depth_cut[p - 1] = 1.0 - key(kSweepBudget, p)->mean_depth / key(0, p)->mean_depth;
    }
    std::printf("  %-18s %3zu %9.1f %9.1f %6.1f%% %7.1f%% %7.1f%% %7.1f%%\n", row.problem.c_str(),
                row.setting, c0, c1, 100.0 * (1.0 - c1 / c0), 100.0 * depth_cut[0],
                100.0 * depth_cut[1], 100.0 * depth_cut[2]);
    if (row.problem == "hamilton_cycles" && row.setting == 2) {
      hc_couplings = 1.0 - c1 / c0;
      hc_depth = depth_cut[2];
    }
  }
  std::size_t ascending_rises = 0;
  std::map<Series, std::size_t> last_depth;
  for (const auto& r : data.ascending) {
    const Series key{r.problem, r.setting, r.seed, r.p};
    const auto it = last_depth.find(key);
    if (it != last_depth.end() && r.depth > it->second) ++ascending_rises;
    last_depth[key] = r.depth;
  }
  std::printf("  for reference, ascending coupling order: %zu depth rises\n", ascending_rises);
  const bool pass = coupling_rises == 0 && depth_rises == 0 &&
                    hc_couplings >= kMinCouplingReduction && hc_depth >= kMinDepthReduction &&
                    data.seconds < kSweepSeconds;
  return {pass, format("%zu series, %zu coupling rises, %zu depth rises; hamilton_cycles "
                       "(8,16): couplings -%.1f%%, depth p=3 -%.1f%%; sweep %.1f s",
                       series.size(), coupling_rises, depth_rises, 100.0 * hc_couplings,
                       100.0 * hc_depth, data.seconds)};
}

Outcome phase_check() {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  double worst = 0.0;
  std::size_t states = 0;
  for (std::size_t r = 0; r < kPhaseQubos; ++r) {
    const std::size_t n = 1 + r % 8;
    const QuboMatrix q = oracle::random_qubo(n, gen);
    const double gamma = angle(gen);
    GateList layer(n);
    append_cost_layer(layer, qubo_to_ising(q), gamma);
    const Solution zero(n);
    const auto base = basis_phase(layer, zero, true);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const Solution x = Solution::from_mask(n, m);
      const auto ratio = basis_phase(layer, x, true) / base;
      const double expected = -gamma * (energy(q, x) - energy(q, zero));
      worst = std::max(worst, std::abs(ratio - std::polar(1.0, expected)));
      ++states;
    }
  }
  return {worst <= kPhaseTolerance,
          format("%zu QUBOs, %zu basis states, max deviation %.3g", kPhaseQubos, states, worst)};
}

double median_factor_seconds(std::size_t n) {
  const QuboMatrix q = max_clique_qubo(sample_graph(n, n * (n - 1) / 4, n), PenaltyWeight(3));
  const double z = default_z(q);
  std::vector<double> times;
  for (std::size_t r = 0; r < kTimingRepeats; ++r) {
    const auto start = Clock::now();
    const auto result = factor_out(q, n, z);
    times.push_back(seconds_since(start));
    if (result.report.steps.empty()) return -1.0;
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

Outcome scaling() {
  const double small = median_factor_seconds(50);
  const double large = median_factor_seconds(100);
  if (small <= 0.0 || large <= 0.0) return {false, "no semi-symmetries found in the timing instances"};
  const double ratio = large / small;
  return {ratio <= kMaxScalingRatio && large < kMaxLargeSeconds,
          format("n=50 %.4f s, n=100 %.4f s, ratio %.2f", small, large, ratio)};
}

}  // namespace

int main() {
  int failed = 0;
  const auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("criterion %d %s: %s (%s)\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  };
  report(1, "worked example round trip", worked_example_round_trip());
  report(2, "energy preservation suite", preservation_suite());
  report(3, "spectrum study", spectrum_study());
  const SweepData sweep = run_full_sweep();
  report(4, "cnot law", cnot_law(sweep));
  report(5, "sweep trends", sweep_trends(sweep));
  report(6, "cost layer phases", phase_check());
  report(7, "factoring scaling", scaling());
  std::printf("%d of 7 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
