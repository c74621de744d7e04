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

#include "semisym/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "semisym/errors.hpp"

namespace semisym {

namespace {

struct TableCell {
  std::size_t v;
  std::size_t e;
};

// Rows of the settings table; the third row carries K = 3.
constexpr std::array<std::array<TableCell, 3>, 5> kTable{{
    {{{30, 87}, {30, 174}, {60, 354}}},
    {{{6, 10}, {6, 8}, {8, 16}}},
    {{{10, 31}, {10, 20}, {20, 114}}},
    {{{30, 131}, {30, 218}, {50, 800}}},
    {{{6, 10}, {6, 8}, {8, 16}}},
}};
constexpr std::size_t kColoringColors = 3;

int problem_rank(const std::string& name) {
  try {
    return static_cast<int>(parse_problem_kind(name));
  } catch (const ParameterError&) {
    return 100;
  }
}

auto sort_key(const SweepRecord& r) {
  return std::make_tuple(problem_rank(r.problem), r.problem, r.setting, r.seed,
                         r.num_ancillas, r.p);
}

std::size_t parse_size(const std::string& field, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(field, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != field.size() || field.front() == '-') {
    throw FormatError("bad integer '" + field + "' on CSV line " + std::to_string(line));
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

void validate(const ProblemSetting& setting) {
  if (setting.e > max_edges(setting.v)) {
    throw ParameterError("setting has more edges than a simple graph allows");
  }
  const bool coloring = setting.problem == ProblemKind::GraphColoring;
  if (coloring != setting.k.has_value()) {
    throw ParameterError("k must be given exactly for graph coloring");
  }
  if (coloring && *setting.k < 1) throw ParameterError("k must be positive");
  if (setting.problem == ProblemKind::HamiltonCycles && setting.v < 3) {
    throw ParameterError("Hamilton cycles need at least 3 vertices");
  }
  PenaltyWeight check(setting.penalty);
  (void)check;
}

std::vector<ProblemSetting> builtin_settings(std::span<const std::uint64_t> seeds,
                                             const TableRowOrder& row_order) {
  std::vector<ProblemSetting> out;
  for (std::size_t row = 0; row < kTable.size(); ++row) {
    for (std::size_t col = 0; col < kTable[row].size(); ++col) {
      for (std::uint64_t seed : seeds) {
        ProblemSetting s;
        s.problem = row_order[row];
        s.index = col;
        s.v = kTable[row][col].v;
        s.e = kTable[row][col].e;
        if (s.problem == ProblemKind::GraphColoring) s.k = kColoringColors;
        s.seed = seed;
        out.push_back(s);
      }
    }
  }
  return out;
}

QuboMatrix encode_setting(const ProblemSetting& setting, PairMode pair_mode) {
  validate(setting);
  const PenaltyWeight a(setting.penalty);
  switch (setting.problem) {
    case ProblemKind::MaxClique:
      return max_clique_qubo(sample_graph(setting.v, setting.e, setting.seed), a);
    case ProblemKind::HamiltonCycles:
      return hamilton_cycle_qubo(sample_graph(setting.v, setting.e, setting.seed), a);
    case ProblemKind::GraphColoring:
      return graph_coloring_qubo(sample_graph(setting.v, setting.e, setting.seed),
                                 *setting.k, a);
    case ProblemKind::VertexCover:
      return vertex_cover_qubo(sample_graph(setting.v, setting.e, setting.seed), a);
    case ProblemKind::GraphIsomorphism: {
      const auto [g1, g2] = sample_graph_pair(setting.v, setting.e, setting.seed, pair_mode);
      return graph_isomorphism_qubo(g1, g2, a);
    }
  }
  throw ParameterError("unknown problem kind");
}

double ZMode::resolve(const QuboMatrix& base) const {
  if (fixed) {
    if (!(*fixed > 0.0)) throw ParameterError("z must be positive");
    return *fixed;
  }
  return default_z(base);
}

std::vector<SweepRecord> sweep_qubo(const QuboMatrix& base, const std::string& problem,
                                    std::size_t setting, std::uint64_t seed,
                                    std::size_t max_ancillas,
                                    std::span<const std::size_t> p_values,
                                    const ZMode& z_mode, const SweepOptions& options) {
  for (std::size_t p : p_values) {
    if (p == 0) throw ParameterError("p must be positive");
  }
  const double z = z_mode.resolve(base);
  const FactoringReport report =
      factor_out(base, max_ancillas, z, options.factoring).report;

  std::vector<SweepRecord> records;
  records.reserve((max_ancillas + 1) * p_values.size());
  QuboMatrix current = base;
  std::size_t applied = 0;
  for (std::size_t budget = 0; budget <= max_ancillas; ++budget) {
    if (budget > 0 && applied == report.steps.size()) {
      // saturated: repeat the previous budget's rows
      const std::size_t from = records.size() - p_values.size();
      for (std::size_t t = 0; t < p_values.size(); ++t) {
        records.push_back(records[from + t]);
        records.back().num_ancillas = budget;
      }
      continue;
    }
    if (budget > 0) {
      const auto& step = report.steps[applied];
      current = enhance(current, step.pair, step.syms, step.z);
      ++applied;
    }
    const std::size_t couplings = coupling_count(current);
    for (std::size_t p : p_values) {
      const GateList circuit = build_circuit(
          current, QaoaParams::uniform(p, options.gamma, options.beta), options.order);
      records.push_back({problem, setting, seed, budget, p, current.n(), couplings,
                         cnot_count(circuit), depth(circuit)});
    }
  }
  return records;
}

std::vector<SweepRecord> run_sweep(const ProblemSetting& setting,
                                   std::size_t max_ancillas,
                                   std::span<const std::size_t> p_values,
                                   const ZMode& z_mode, const SweepOptions& options) {
  const QuboMatrix base = encode_setting(setting, options.pair_mode);
  return sweep_qubo(base, std::string(to_string(setting.problem)), setting.index,
                    setting.seed, max_ancillas, p_values, z_mode, options);
}

std::vector<SweepRecord> run_sweeps(std::span<const ProblemSetting> settings,
                                    std::size_t max_ancillas,
                                    std::span<const std::size_t> p_values,
                                    const ZMode& z_mode, const SweepOptions& options,
                                    std::size_t jobs) {
  for (const auto& s : settings) validate(s);
  std::vector<std::vector<SweepRecord>> results(settings.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t t = next++; t < settings.size(); t = next++) {
      try {
        results[t] = run_sweep(settings[t], max_ancillas, p_values, z_mode, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, settings.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRecord> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return sort_key(a) < sort_key(b);
  });
  return all;
}

// ---------------------------------------------------------------------------

void write_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.problem << ',' << r.setting << ',' << r.seed << ',' << r.num_ancillas
        << ',' << r.p << ',' << r.qubits << ',' << r.couplings << ',' << r.cnots
        << ',' << r.depth << '\n';
  }
}

std::vector<SweepRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw FormatError("unexpected CSV header: " + line);

  std::vector<SweepRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 9 || fields[0].empty()) {
      throw FormatError("CSV line " + std::to_string(line_no) + " needs 9 fields");
    }
    SweepRecord r;
    r.problem = fields[0];
    r.setting = parse_size(fields[1], line_no);
    r.seed = parse_size(fields[2], line_no);
    r.num_ancillas = parse_size(fields[3], line_no);
    r.p = parse_size(fields[4], line_no);
    r.qubits = parse_size(fields[5], line_no);
    r.couplings = parse_size(fields[6], line_no);
    r.cnots = parse_size(fields[7], line_no);
    r.depth = parse_size(fields[8], line_no);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<ParetoPoint> pareto_front(std::vector<ParetoPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // Sorted by ancillas then couplings: a point survives iff its couplings
  // beat every point with fewer ancillas.
  std::vector<ParetoPoint> front;
  for (const auto& pt : points) {
    if (!front.empty() && front.back().ancillas == pt.ancillas) continue;
    if (front.empty() || pt.couplings < front.back().couplings) front.push_back(pt);
  }
  return front;
}

std::vector<AggregateRow> aggregate(std::span<const SweepRecord> records) {
  using Key = std::tuple<int, std::string, std::size_t, std::size_t, std::size_t>;
  std::map<Key, std::vector<const SweepRecord*>> groups;
  for (const auto& r : records) {
    groups[{problem_rank(r.problem), r.problem, r.setting, r.num_ancillas, r.p}]
        .push_back(&r);
  }
  std::vector<AggregateRow> out;
  for (const auto& [key, members] : groups) {
    AggregateRow row;
    row.problem = std::get<1>(key);
    row.setting = std::get<2>(key);
    row.num_ancillas = std::get<3>(key);
    row.p = std::get<4>(key);
    row.count = members.size();
    const double count = static_cast<double>(members.size());
    double sum_c = 0.0;
    double sum_d = 0.0;
    for (const auto* r : members) {
      sum_c += static_cast<double>(r->couplings);
      sum_d += static_cast<double>(r->depth);
    }
    row.mean_couplings = sum_c / count;
    row.mean_depth = sum_d / count;
    double var_c = 0.0;
    double var_d = 0.0;
    for (const auto* r : members) {
      const double dc = static_cast<double>(r->couplings) - row.mean_couplings;
      const double dd = static_cast<double>(r->depth) - row.mean_depth;
      var_c += dc * dc;
      var_d += dd * dd;
    }
    row.std_couplings = std::sqrt(var_c / count);
    row.std_depth = std::sqrt(var_d / count);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace semisym
