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

#include "semisym/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "file_util.hpp"
#include "json.hpp"
#include "semisym/errors.hpp"

namespace semisym {

namespace {

void check_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw ParameterError(std::string(what) + " must be finite");
  }
}

nlohmann::json number_json(double value) {
  double integral = 0.0;
  if (std::modf(value, &integral) == 0.0 &&
      std::abs(value) < 9007199254740992.0) {
    return static_cast<std::int64_t>(value);
  }
  return value;
}

}  // namespace

bool coefficients_equal(double a, double b) noexcept {
  return a == b || std::abs(a - b) <= kCoefficientTolerance;
}

// ---------------------------------------------------------------------------
// Solution

Solution Solution::from_mask(std::size_t n, std::uint64_t mask) {
  if (n < 64 && (mask >> n) != 0) {
    throw DimensionError("mask has bits above n");
  }
  Solution x(n);
  for (Index i = 0; i < n && i < 64; ++i) x.bits_[i] = (mask >> i) & 1u;
  return x;
}

Solution Solution::from_indices(std::size_t n,
                                std::initializer_list<Index> ones) {
  return from_indices(n, std::span<const Index>(ones.begin(), ones.size()));
}

Solution Solution::from_indices(std::size_t n, std::span<const Index> ones) {
  Solution x(n);
  for (Index i : ones) {
    if (i >= n) throw DimensionError("index out of range in from_indices");
    x.bits_[i] = 1;
  }
  return x;
}

std::uint64_t Solution::mask() const {
  if (bits_.size() > 64) throw CapacityError("mask() needs at most 64 bits");
  std::uint64_t m = 0;
  for (Index i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

std::vector<Index> Solution::ones() const {
  std::vector<Index> out;
  for (Index i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

Solution Solution::concat(const Solution& tail) const {
  Solution out = *this;
  out.bits_.insert(out.bits_.end(), tail.bits_.begin(), tail.bits_.end());
  return out;
}

// ---------------------------------------------------------------------------
// QuboMatrix

QuboMatrix::QuboMatrix(std::size_t n, double offset) : n_(n) {
  set_offset(offset);
}

void QuboMatrix::set_offset(double offset) {
  check_finite(offset, "offset");
  offset_ = offset;
}

void QuboMatrix::resize(std::size_t n) {
  if (!entries_.empty()) {
    Index max_index = 0;
    for (const auto& [k, v] : entries_) max_index = std::max(max_index, k.second);
    if (max_index >= n) {
      throw DimensionError("resize would drop a referenced qubit");
    }
  }
  n_ = n;
}

QuboMatrix::Key QuboMatrix::key(Index i, Index j) const {
  if (i >= n_ || j >= n_) {
    throw DimensionError("qubit index " + std::to_string(std::max(i, j)) +
                         " out of range for n=" + std::to_string(n_));
  }
  return i <= j ? Key{i, j} : Key{j, i};
}

double QuboMatrix::get(Index i, Index j) const {
  auto it = entries_.find(key(i, j));
  return it == entries_.end() ? 0.0 : it->second;
}

void QuboMatrix::set(Index i, Index j, double value) {
  check_finite(value, "coefficient");
  Key k = key(i, j);
  if (value == 0.0) {
    entries_.erase(k);
  } else {
    entries_[k] = value;
  }
}

void QuboMatrix::add(Index i, Index j, double value) {
  set(i, j, get(i, j) + value);
}

void QuboMatrix::erase(Index i, Index j) { entries_.erase(key(i, j)); }

bool QuboMatrix::is_integral() const {
  auto integral = [](double v) { return std::trunc(v) == v; };
  if (!integral(offset_)) return false;
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return integral(e.second); });
}

// ---------------------------------------------------------------------------
// Evaluation

double energy(const QuboMatrix& q, const Solution& x) {
  if (x.size() != q.n()) {
    throw DimensionError("solution length " + std::to_string(x.size()) +
                         " does not match n=" + std::to_string(q.n()));
  }
  double sum = 0.0;
  for (const auto& [k, v] : q.entries()) {
    if (x[k.first] && x[k.second]) sum += v;
  }
  return q.offset() + sum;
}

std::size_t coupling_count(const QuboMatrix& q) {
  return static_cast<std::size_t>(
      std::count_if(q.entries().begin(), q.entries().end(),
                    [](const auto& e) { return e.first.first < e.first.second; }));
}

MaskEvaluator::MaskEvaluator(const QuboMatrix& q)
    : n_(q.n()), offset_(q.offset()) {
  if (n_ > 64) throw CapacityError("MaskEvaluator supports at most 64 qubits");
  terms_.reserve(q.entries().size());
  for (const auto& [k, v] : q.entries()) {
    terms_.push_back({(std::uint64_t{1} << k.first) | (std::uint64_t{1} << k.second), v});
  }
}

double MaskEvaluator::operator()(std::uint64_t mask) const noexcept {
  double sum = 0.0;
  for (const Term& t : terms_) {
    if ((mask & t.mask) == t.mask) sum += t.value;
  }
  return offset_ + sum;
}

std::vector<SpectrumEntry> spectrum(const QuboMatrix& q, std::size_t limit) {
  if (q.n() > limit || q.n() > 63) {
    throw CapacityError("spectrum of n=" + std::to_string(q.n()) +
                        " exceeds enumeration limit " + std::to_string(limit));
  }
  const MaskEvaluator eval(q);
  const std::uint64_t count = std::uint64_t{1} << q.n();
  std::vector<std::pair<double, std::uint64_t>> order;
  order.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) order.emplace_back(eval(m), m);
  std::sort(order.begin(), order.end());

  std::vector<SpectrumEntry> out;
  out.reserve(count);
  for (const auto& [e, m] : order) {
    out.push_back({Solution::from_mask(q.n(), m), e});
  }
  return out;
}

double min_energy_over_ancillas(const QuboMatrix& q_mod, std::size_t base_n,
                                const Solution& x, std::size_t limit) {
  if (x.size() != base_n) {
    throw DimensionError("solution length does not match base_n");
  }
  if (base_n > q_mod.n()) {
    throw DimensionError("base_n exceeds the modified matrix size");
  }
  const std::size_t ancillas = q_mod.n() - base_n;
  if (ancillas > limit || q_mod.n() > 64) {
    throw CapacityError(std::to_string(ancillas) +
                        " ancillas exceed enumeration limit " +
                        std::to_string(limit));
  }
  const MaskEvaluator eval(q_mod);
  const std::uint64_t base = x.mask();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << ancillas); ++a) {
    best = std::min(best, eval(base | (a << base_n)));
  }
  return best;
}

// ---------------------------------------------------------------------------
// JSON

std::string qubo_to_json(const QuboMatrix& q) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [k, v] : q.entries()) {
    entries.push_back({k.first, k.second, number_json(v)});
  }
  nlohmann::json doc;
  doc["n"] = q.n();
  doc["offset"] = number_json(q.offset());
  doc["entries"] = std::move(entries);
  return doc.dump();
}

QuboMatrix qubo_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid QUBO JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned() ||
      !doc.contains("entries") || !doc["entries"].is_array()) {
    throw FormatError("QUBO JSON needs unsigned \"n\" and array \"entries\"");
  }
  double offset = 0.0;
  if (doc.contains("offset")) {
    if (!doc["offset"].is_number()) throw FormatError("\"offset\" must be a number");
    offset = doc["offset"].get<double>();
    if (!std::isfinite(offset)) throw FormatError("non-finite offset");
  }
  QuboMatrix q(doc["n"].get<std::size_t>(), offset);
  std::set<QuboMatrix::Key> seen;
  for (const auto& e : doc["entries"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned() || !e[2].is_number()) {
      throw FormatError("each entry must be [i, j, value]");
    }
    const auto i = e[0].get<Index>();
    const auto j = e[1].get<Index>();
    const auto v = e[2].get<double>();
    if (i > j) throw FormatError("entry with i > j");
    if (i >= q.n() || j >= q.n()) throw FormatError("entry index out of range");
    if (!std::isfinite(v)) throw FormatError("non-finite coefficient");
    if (!seen.insert({i, j}).second) {
      throw FormatError("duplicate entry (" + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
    }
    q.set(i, j, v);
  }
  return q;
}

QuboMatrix read_qubo_file(const std::string& path) {
  return qubo_from_json(detail::read_text_file(path));
}

void write_qubo_file(const std::string& path, const QuboMatrix& q) {
  detail::write_text_file(path, qubo_to_json(q) + "\n");
}

}  // namespace semisym
