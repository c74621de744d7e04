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

#include "semisym/factoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "file_util.hpp"
#include "json.hpp"
#include "semisym/errors.hpp"

namespace semisym {

namespace {

bool shares(double a, double b) {
  return a != 0.0 && b != 0.0 && coefficients_equal(a, b);
}

bool energies_equal(double a, double b) {
  return a == b ||
         std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

void check_z(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw ParameterError("penalty z must be positive and finite");
  }
}

// Dense working copy of a growing QUBO together with the shared-coupling
// count of every qubit pair. After an enhancement only the (pair, column)
// combinations that read a changed entry are re-counted, which keeps each
// round at O(n^2).
class FactoringEngine {
 public:
  FactoringEngine(const QuboMatrix& q, RowSum row_sum)
      : n_(q.n()), row_sum_(row_sum), offset_(q.offset()) {
    reserve(std::max<std::size_t>(2 * n_, 4));
    for (const auto& [k, v] : q.entries()) {
      w(k.first, k.second) = v;
      w(k.second, k.first) = v;
    }
    for (Index u = 0; u < n_; ++u) {
      for (Index l = u + 1; l < n_; ++l) {
        std::int32_t count = 0;
        for (Index k = 0; k < n_; ++k) {
          if (k != u && k != l && shares(w(u, k), w(l, k))) ++count;
        }
        shared(u, l) = count;
        shared(l, u) = count;
      }
    }
  }

  std::size_t n() const { return n_; }

  std::vector<ConflictPair> conflicts() const {
    std::vector<double> z(n_, 0.0);
    for (Index u = 0; u < n_; ++u) {
      for (Index v = 0; v < n_; ++v) {
        const double value = w(u, v);
        if (value >= 0.0) continue;
        if (u == v && row_sum_ == RowSum::ExcludeDiagonal) continue;
        z[u] += value;
      }
    }
    std::vector<ConflictPair> out;
    for (Index u = 0; u < n_; ++u) {
      for (Index v = u + 1; v < n_; ++v) {
        const double value = w(u, v);
        if (value != 0.0 && value > -z[u] - z[v]) out.push_back({u, v});
      }
    }
    return out;
  }

  std::int32_t shared_count(ConflictPair p) const { return shared(p.i, p.j); }

  std::vector<Index> shared_set(ConflictPair p) const {
    std::vector<Index> out;
    for (Index k = 0; k < n_; ++k) {
      if (k != p.i && k != p.j && shares(w(p.i, k), w(p.j, k))) out.push_back(k);
    }
    return out;
  }

  void enhance(ConflictPair p, std::span<const Index> syms, double z) {
    if (n_ == cap_) reserve(2 * cap_);
    const Index a = n_++;
    const Index i = p.i;
    const Index j = p.j;

    std::vector<Change> changes;
    changes.reserve(3 + 3 * syms.size());
    changes.push_back({i, a, -2.0 * z});
    changes.push_back({j, a, -2.0 * z});
    changes.push_back({i, j, w(i, j) + 2.0 * z});
    for (Index k : syms) {
      changes.push_back({k, a, w(i, k)});
      changes.push_back({i, k, 0.0});
      changes.push_back({j, k, 0.0});
    }

    // Column k -> rows whose entry in column k changes.
    std::vector<std::vector<Index>> touched(n_);
    std::vector<Index> columns;
    auto touch = [&](Index col, Index row) {
      if (touched[col].empty()) columns.push_back(col);
      touched[col].push_back(row);
    };
    for (const Change& c : changes) {
      touch(c.v, c.u);
      touch(c.u, c.v);
    }

    recount(columns, touched, -1);
    for (const Change& c : changes) {
      w(c.u, c.v) = c.value;
      w(c.v, c.u) = c.value;
    }
    w(i, i) += z;
    w(j, j) += z;
    w(a, a) = z;
    recount(columns, touched, +1);
  }

  QuboMatrix to_qubo() const {
    QuboMatrix out(n_, offset_);
    for (Index u = 0; u < n_; ++u) {
      for (Index v = u; v < n_; ++v) {
        if (w(u, v) != 0.0) out.set(u, v, w(u, v));
      }
    }
    return out;
  }

 private:
  struct Change {
    Index u;
    Index v;
    double value;
  };

  double& w(Index u, Index v) { return values_[u * cap_ + v]; }
  double w(Index u, Index v) const { return values_[u * cap_ + v]; }
  std::int32_t& shared(Index u, Index v) { return shared_[u * cap_ + v]; }
  std::int32_t shared(Index u, Index v) const { return shared_[u * cap_ + v]; }

  void reserve(std::size_t cap) {
    std::vector<double> values(cap * cap, 0.0);
    std::vector<std::int32_t> counts(cap * cap, 0);
    const std::size_t keep = values_.empty() ? 0 : n_;
    for (Index u = 0; u < keep; ++u) {
      for (Index v = 0; v < keep; ++v) {
        values[u * cap + v] = values_[u * cap_ + v];
        counts[u * cap + v] = shared_[u * cap_ + v];
      }
    }
    values_ = std::move(values);
    shared_ = std::move(counts);
    cap_ = cap;
  }

  // Adds `sign` for every (pair {u, l}, column k) match where the entry
  // (u, k) is about to change or has just changed. Each pair is visited once
  // per column even when both of its rows changed in that column.
  void recount(const std::vector<Index>& columns,
               const std::vector<std::vector<Index>>& touched, int sign) {
    std::vector<std::uint8_t> mark(n_, 0);
    for (Index k : columns) {
      const auto& rows = touched[k];
      for (Index u : rows) mark[u] = 1;
      for (Index u : rows) {
        for (Index l = 0; l < n_; ++l) {
          if (l == k || l == u || (mark[l] && l < u)) continue;
          if (shares(w(u, k), w(l, k))) {
            shared(u, l) += sign;
            shared(l, u) += sign;
          }
        }
      }
      for (Index u : rows) mark[u] = 0;
    }
  }

  std::size_t n_;
  std::size_t cap_ = 0;
  RowSum row_sum_;
  double offset_;
  std::vector<double> values_;
  std::vector<std::int32_t> shared_;
};

}  // namespace

std::vector<double> negative_row_sums(const QuboMatrix& q, RowSum row_sum) {
  std::vector<double> z(q.n(), 0.0);
  // Map order visits row u's entries with ascending partner index, the same
  // summation order as a dense row scan.
  for (const auto& [k, v] : q.entries()) {
    if (v >= 0.0) continue;
    if (k.first == k.second) {
      if (row_sum == RowSum::IncludeDiagonal) z[k.first] += v;
    } else {
      z[k.first] += v;
      z[k.second] += v;
    }
  }
  return z;
}

std::vector<ConflictPair> get_conflict_list(const QuboMatrix& q, RowSum row_sum) {
  const auto z = negative_row_sums(q, row_sum);
  std::vector<ConflictPair> out;
  for (const auto& [k, v] : q.entries()) {
    if (k.first < k.second && v > -z[k.first] - z[k.second]) {
      out.push_back({k.first, k.second});
    }
  }
  return out;
}

std::vector<Index> shared_couplings(const QuboMatrix& q, ConflictPair pair) {
  if (pair.i >= q.n() || pair.j >= q.n()) throw DimensionError("pair out of range");
  std::vector<Index> out;
  for (Index k = 0; k < q.n(); ++k) {
    if (k == pair.i || k == pair.j) continue;
    if (shares(q.get(pair.i, k), q.get(pair.j, k))) out.push_back(k);
  }
  return out;
}

SemiSymmetry get_most_sym_qubits(const QuboMatrix& q,
                                 std::span<const ConflictPair> conflicts) {
  SemiSymmetry best;
  for (const ConflictPair& p : conflicts) {
    auto syms = shared_couplings(q, p);
    if (syms.size() >= best.syms.size()) best = {p, std::move(syms)};
  }
  return best;
}

QuboMatrix enhance(const QuboMatrix& q, ConflictPair pair,
                   std::span<const Index> syms, double z) {
  check_z(z);
  const auto [i, j] = pair;
  if (!(i < j) || j >= q.n()) throw ParameterError("enhance needs i < j < n");
  std::set<Index> seen;
  for (Index k : syms) {
    if (k >= q.n() || k == i || k == j || !seen.insert(k).second) {
      throw ParameterError("syms must be distinct qubits outside the pair");
    }
    if (!shares(q.get(i, k), q.get(j, k))) {
      throw ParameterError("qubit " + std::to_string(k) +
                           " is not coupled identically to both pair members");
    }
  }

  QuboMatrix out = q;
  const Index a = q.n();
  out.resize(a + 1);
  out.add(i, i, z);
  out.add(j, j, z);
  out.set(a, a, z);
  out.set(i, a, -2.0 * z);
  out.set(j, a, -2.0 * z);
  out.add(i, j, 2.0 * z);
  for (Index k : syms) {
    out.set(k, a, q.get(i, k));
    out.erase(i, k);
    out.erase(j, k);
  }
  return out;
}

FactoringResult factor_out(const QuboMatrix& q, std::size_t num_ancillas,
                           double z, const FactoringOptions& options) {
  check_z(z);
  FactoringReport report;
  report.base_n = q.n();
  report.z = z;

  FactoringEngine engine(q, options.row_sum);
  auto conflicts = engine.conflicts();
  while (!conflicts.empty()) {
    ConflictPair best{0, 1};
    std::int32_t best_count = -1;
    for (const ConflictPair& p : conflicts) {
      if (const auto c = engine.shared_count(p); c >= best_count) {
        best = p;
        best_count = c;
      }
    }
    if (best_count < static_cast<std::int32_t>(kMinSemiSymmetry) ||
        report.steps.size() == num_ancillas) {
      break;
    }
    auto syms = engine.shared_set(best);
    const Index ancilla = engine.n();
    engine.enhance(best, syms, z);
    report.steps.push_back({ancilla, best, std::move(syms), z});
    conflicts = engine.conflicts();
  }

  report.final_n = engine.n();
  return {engine.to_qubo(), std::move(report)};
}

QuboMatrix replay(const QuboMatrix& base, const FactoringReport& report,
                  std::size_t steps) {
  if (report.base_n != base.n()) {
    throw ParameterError("report base_n does not match the matrix");
  }
  QuboMatrix q = base;
  const auto count = std::min(steps, report.steps.size());
  for (std::size_t s = 0; s < count; ++s) {
    const auto& step = report.steps[s];
    if (step.ancilla != q.n()) {
      throw ParameterError("report ancilla indices are not consecutive");
    }
    q = enhance(q, step.pair, step.syms, step.z);
  }
  return q;
}

double default_z(const QuboMatrix& q) {
  double sum = 0.0;
  for (const auto& [k, v] : q.entries()) sum += std::abs(v);
  return sum;
}

bool is_conflicting_exact(const QuboMatrix& q, ConflictPair pair,
                          std::size_t limit) {
  const auto [i, j] = pair;
  if (!(i < j) || j >= q.n()) throw ParameterError("pair needs i < j < n");
  if (q.n() > limit || q.n() > 63) {
    throw CapacityError("exact conflict test exceeds enumeration limit");
  }
  const MaskEvaluator eval(q);
  const std::uint64_t bi = std::uint64_t{1} << i;
  const std::uint64_t bj = std::uint64_t{1} << j;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << q.n()); ++m) {
    if (m & (bi | bj)) continue;
    const double both = eval(m | bi | bj);
    if (!(both > eval(m) && both > eval(m | bi) && both > eval(m | bj))) {
      return false;
    }
  }
  return true;
}

VerificationVerdict verify_equivalence(const QuboMatrix& q, const QuboMatrix& q_mod,
                                       const FactoringReport& report,
                                       std::size_t limit) {
  if (report.base_n != q.n() || report.final_n != q_mod.n() ||
      report.final_n - report.base_n != report.steps.size()) {
    throw ParameterError("report does not describe q -> q_mod");
  }
  const std::size_t n = q.n();
  const std::size_t ancillas = q_mod.n() - n;
  if (n > limit || ancillas > limit || q_mod.n() > 63) {
    throw CapacityError("verification exceeds enumeration limit");
  }

  const MaskEvaluator original(q);
  const MaskEvaluator modified(q_mod);
  VerificationVerdict verdict;
  verdict.original_min = std::numeric_limits<double>::infinity();
  verdict.modified_min = std::numeric_limits<double>::infinity();

  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool valid = true;
    std::uint64_t extended = x;
    for (const auto& step : report.steps) {
      const bool bi = (extended >> step.pair.i) & 1u;
      const bool bj = (extended >> step.pair.j) & 1u;
      if (bi && bj) valid = false;
      if (bi || bj) extended |= std::uint64_t{1} << step.ancilla;
    }

    const double e = original(x);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << ancillas); ++a) {
      best = std::min(best, modified(x | (a << n)));
    }
    verdict.original_min = std::min(verdict.original_min, e);
    verdict.modified_min = std::min(verdict.modified_min, best);

    if (valid) {
      ++verdict.valid_count;
      if (!energies_equal(best, e)) verdict.valid_preserved = false;
    } else {
      ++verdict.invalid_count;
      if (best < e && !energies_equal(best, e)) {
        verdict.invalid_not_decreased = false;
        ++verdict.decreased_count;
      }
    }
  }
  verdict.global_min_preserved =
      energies_equal(verdict.original_min, verdict.modified_min);
  return verdict;
}

// ---------------------------------------------------------------------------

std::string report_to_json(const FactoringReport& report) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"ancilla", s.ancilla},
                     {"i", s.pair.i},
                     {"j", s.pair.j},
                     {"syms", s.syms}});
  }
  nlohmann::json doc;
  doc["base_n"] = report.base_n;
  doc["final_n"] = report.final_n;
  doc["z"] = report.z;
  doc["steps"] = std::move(steps);
  return doc.dump();
}

FactoringReport report_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    FactoringReport report;
    report.base_n = doc.at("base_n").get<std::size_t>();
    report.final_n = doc.at("final_n").get<std::size_t>();
    report.z = doc.at("z").get<double>();
    if (!std::isfinite(report.z)) throw FormatError("non-finite z");
    for (const auto& s : doc.at("steps")) {
      FactoringStep step;
      step.ancilla = s.at("ancilla").get<Index>();
      step.pair = {s.at("i").get<Index>(), s.at("j").get<Index>()};
      step.syms = s.at("syms").get<std::vector<Index>>();
      step.z = report.z;
      report.steps.push_back(std::move(step));
    }
    if (report.final_n < report.base_n ||
        report.final_n - report.base_n != report.steps.size()) {
      throw FormatError("final_n - base_n must equal the number of steps");
    }
    for (std::size_t s = 0; s < report.steps.size(); ++s) {
      if (report.steps[s].ancilla != report.base_n + s) {
        throw FormatError("ancilla indices must be base_n, base_n + 1, ...");
      }
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid report JSON: ") + e.what());
  }
}

FactoringReport read_report_file(const std::string& path) {
  return report_from_json(detail::read_text_file(path));
}

void write_report_file(const std::string& path, const FactoringReport& report) {
  detail::write_text_file(path, report_to_json(report) + "\n");
}

}  // namespace semisym
