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

#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semisym/qubo.hpp"

namespace semisym {

/// Two qubits flagged as conflicting, i < j.
struct ConflictPair {
  Index i = 0;
  Index j = 1;

  auto operator<=>(const ConflictPair&) const = default;
};

/// A conflicting pair with the qubits k (k not in {i, j}) for which
/// Q_ik = Q_jk != 0. Eligible for factoring when syms.size() >= 3.
struct SemiSymmetry {
  ConflictPair pair;
  std::vector<Index> syms;
};

inline constexpr std::size_t kMinSemiSymmetry = 3;

/// How the per-row negative budget Z[i] of the conflict test is summed.
enum class RowSum {
  IncludeDiagonal,  ///< negative diagonal entry counts toward Z[i]
  ExcludeDiagonal,  ///< only negative couplings count
};

struct FactoringOptions {
  RowSum row_sum = RowSum::IncludeDiagonal;
};

struct FactoringStep {
  Index ancilla = 0;
  ConflictPair pair;
  std::vector<Index> syms;
  double z = 0.0;
};

struct FactoringReport {
  std::size_t base_n = 0;
  std::size_t final_n = 0;
  double z = 0.0;
  std::vector<FactoringStep> steps;
};

struct FactoringResult {
  QuboMatrix matrix;
  FactoringReport report;
};

/// Z[i] = sum of the negative entries of the symmetrized row i.
std::vector<double> negative_row_sums(const QuboMatrix& q,
                                      RowSum row_sum = RowSum::IncludeDiagonal);

/// All stored couplings (i, j), i < j, with Q_ij > -Z[i] - Z[j], sorted.
/// This is a sufficient condition for the pair to be conflicting.
std::vector<ConflictPair> get_conflict_list(
    const QuboMatrix& q, RowSum row_sum = RowSum::IncludeDiagonal);

/// The qubits k outside {i, j} with Q_ik = Q_jk != 0, ascending.
std::vector<Index> shared_couplings(const QuboMatrix& q, ConflictPair pair);

/// Scans `conflicts` in order and keeps the pair with the most shared
/// couplings; on ties the later pair wins. An empty list yields the pair
/// (0, 1) with no syms.
SemiSymmetry get_most_sym_qubits(const QuboMatrix& q,
                                 std::span<const ConflictPair> conflicts);

/// Appends ancilla a = q.n() that stands in for "i OR j" and moves the
/// shared couplings onto it:
///
///   Q_ii += z, Q_jj += z, Q_aa = z, Q_ia = Q_ja = -2z, Q_ij += 2z,
///   Q_ka = Q_ik and Q_ik = Q_jk = 0 for every k in syms.
///
/// Q_ij is incremented rather than overwritten so that the energy of
/// x_i = x_j = 1 keeps its original coupling underneath the penalty.
QuboMatrix enhance(const QuboMatrix& q, ConflictPair pair,
                   std::span<const Index> syms, double z);

/// Repeatedly factors the largest semi-symmetry into a new ancilla until
/// the budget is spent, no conflicts remain, or the best candidate shares
/// fewer than three couplings. Conflicts are recomputed on the enhanced
/// matrix every round, so ancillas take part in later rounds.
///
/// Runs in O(n^3) for n = final qubit count: the shared-coupling counts of
/// all pairs are built once and patched after each enhancement.
FactoringResult factor_out(const QuboMatrix& q, std::size_t num_ancillas,
                           double z, const FactoringOptions& options = {});

/// Re-applies the first `steps` steps of `report` to `base` via enhance.
/// factor_out(q, k, z).matrix equals replay(q, factor_out(q, m, z).report, k)
/// for every k <= m.
QuboMatrix replay(const QuboMatrix& base, const FactoringReport& report,
                  std::size_t steps = std::numeric_limits<std::size_t>::max());

/// Sum of |Q_ij| over all stored entries, diagonal included. Large enough
/// for every penalty inequality the ancilla construction relies on.
double default_z(const QuboMatrix& q);

/// Brute-force check of the conflict definition: with the other bits fixed
/// arbitrarily, x_i = x_j = 1 is strictly worse than each of the other three
/// assignments of (x_i, x_j).
bool is_conflicting_exact(const QuboMatrix& q, ConflictPair pair,
                          std::size_t limit = kDefaultEnumerationLimit);

struct VerificationVerdict {
  bool valid_preserved = true;        ///< best-ancilla energy == original, valid x
  bool invalid_not_decreased = true;  ///< best-ancilla energy >= original, invalid x
  bool global_min_preserved = true;   ///< min over q == min over q_mod
  std::size_t valid_count = 0;
  std::size_t invalid_count = 0;
  std::size_t decreased_count = 0;  ///< invalid x whose energy went down
  double original_min = 0.0;
  double modified_min = 0.0;

  bool all() const noexcept {
    return valid_preserved && invalid_not_decreased && global_min_preserved;
  }
};

/// Classifies every base assignment x. Ancilla values are extended
/// canonically in step order (a = x_i OR x_j); x is valid when no factored
/// pair has both bits set in that extension. Then compares
/// min_energy_over_ancillas(q_mod, q.n(), x) with energy(q, x).
VerificationVerdict verify_equivalence(const QuboMatrix& q, const QuboMatrix& q_mod,
                                       const FactoringReport& report,
                                       std::size_t limit = kDefaultEnumerationLimit);

/// {"base_n", "final_n", "z", "steps": [{"ancilla", "i", "j", "syms"}]}
std::string report_to_json(const FactoringReport& report);
FactoringReport report_from_json(std::string_view text);

FactoringReport read_report_file(const std::string& path);
void write_report_file(const std::string& path, const FactoringReport& report);

}  // namespace semisym
