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
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semisym {

using Index = std::size_t;

/// Default guard on the number of bits enumerated exhaustively.
inline constexpr std::size_t kDefaultEnumerationLimit = 24;

/// Tolerance used when comparing non-integer coefficients for equality.
/// Integer-valued coefficients are compared exactly.
inline constexpr double kCoefficientTolerance = 1e-9;

/// True when two coefficients are considered identical.
bool coefficients_equal(double a, double b) noexcept;

/// A binary assignment x in {0,1}^n. Qubit i is bit i of `mask()`.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::size_t n) : bits_(n, 0) {}

  static Solution from_mask(std::size_t n, std::uint64_t mask);
  static Solution from_indices(std::size_t n, std::initializer_list<Index> ones);
  static Solution from_indices(std::size_t n, std::span<const Index> ones);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](Index i) const { return bits_.at(i) != 0; }
  void set(Index i, bool value = true) { bits_.at(i) = value ? 1 : 0; }

  /// Bit i of the result is qubit i. Requires size() <= 64.
  std::uint64_t mask() const;

  /// Indices of the qubits set to one, ascending.
  std::vector<Index> ones() const;

  /// This assignment followed by `tail` (used to append ancilla values).
  Solution concat(const Solution& tail) const;

  bool operator==(const Solution&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// A QUBO matrix stored as a sparse upper triangle plus a constant offset.
///
/// Qubits are 0-based; the conventional 1-based labels of worked examples
/// shift down by one. Assigning to (j, i) with j > i writes (i, j), and
/// assigning exactly zero removes the entry, so every stored coefficient is
/// nonzero and finite. Integer-valued inputs stay exact: every coefficient
/// arithmetic in the library is addition or multiplication by small
/// integers, which binary64 carries without rounding below 2^53.
class QuboMatrix {
 public:
  using Key = std::pair<Index, Index>;
  using Entries = std::map<Key, double>;

  QuboMatrix() = default;
  explicit QuboMatrix(std::size_t n, double offset = 0.0);

  std::size_t n() const noexcept { return n_; }
  double offset() const noexcept { return offset_; }
  void set_offset(double offset);

  /// Grows (or shrinks) the qubit count. Shrinking below a referenced index
  /// is a DimensionError.
  void resize(std::size_t n);

  /// Q_{ij} read symmetrically; zero when absent.
  double get(Index i, Index j) const;
  void set(Index i, Index j, double value);
  void add(Index i, Index j, double value);
  void erase(Index i, Index j);

  const Entries& entries() const noexcept { return entries_; }

  /// True when every coefficient and the offset are integers.
  bool is_integral() const;

  bool operator==(const QuboMatrix&) const = default;

 private:
  Key key(Index i, Index j) const;

  std::size_t n_ = 0;
  double offset_ = 0.0;
  Entries entries_;
};

/// offset + sum_{i<=j} x_i x_j Q_ij.
double energy(const QuboMatrix& q, const Solution& x);

/// Number of stored off-diagonal entries.
std::size_t coupling_count(const QuboMatrix& q);

struct SpectrumEntry {
  Solution solution;
  double energy = 0.0;
};

/// All 2^n assignments sorted by energy, ties by mask value ascending.
std::vector<SpectrumEntry> spectrum(const QuboMatrix& q,
                                    std::size_t limit = kDefaultEnumerationLimit);

/// min over ancilla bits a of energy(q_mod, x ++ a), where the ancillas are
/// the qubits [base_n, q_mod.n()).
double min_energy_over_ancillas(const QuboMatrix& q_mod, std::size_t base_n,
                                const Solution& x,
                                std::size_t limit = kDefaultEnumerationLimit);

/// Flattened evaluator over 64-bit masks for enumeration loops. Produces
/// bit-identical results to `energy`.
class MaskEvaluator {
 public:
  explicit MaskEvaluator(const QuboMatrix& q);

  double operator()(std::uint64_t mask) const noexcept;
  std::size_t n() const noexcept { return n_; }

 private:
  struct Term {
    std::uint64_t mask;
    double value;
  };
  std::size_t n_;
  double offset_;
  std::vector<Term> terms_;
};

/// QUBO JSON: {"n": int, "offset": number, "entries": [[i, j, value], ...]}
/// with 0-based i <= j, sorted by (i, j).
std::string qubo_to_json(const QuboMatrix& q);
QuboMatrix qubo_from_json(std::string_view text);

QuboMatrix read_qubo_file(const std::string& path);
void write_qubo_file(const std::string& path, const QuboMatrix& q);

}  // namespace semisym
