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

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semisym/qubo.hpp"

namespace semisym {

enum class GateKind { H, RX, RZ, CNOT };

/// One gate. `target` is only meaningful for CNOT, `angle` only for RX/RZ.
struct Gate {
  GateKind kind = GateKind::H;
  Index qubit = 0;
  Index target = 0;
  double angle = 0.0;

  static Gate h(Index q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate rx(Index q, double theta) { return {GateKind::RX, q, 0, theta}; }
  static Gate rz(Index q, double theta) { return {GateKind::RZ, q, 0, theta}; }
  static Gate cnot(Index control, Index target) {
    return {GateKind::CNOT, control, target, 0.0};
  }

  bool operator==(const Gate&) const = default;
};

class GateList {
 public:
  explicit GateList(std::size_t n = 0) : n_(n) {}

  /// Rejects operands >= n and CNOTs whose operands coincide.
  void add(const Gate& g);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  bool operator==(const GateList&) const = default;

 private:
  std::size_t n_;
  std::vector<Gate> gates_;
};

/// Ising form of a QUBO under x_i = (1 - s_i) / 2, s_i in {-1, +1}:
///   H = sum_{i<k} couplings_ik s_i s_k + sum_i fields_i s_i + constant.
struct IsingModel {
  std::size_t n = 0;
  std::vector<double> fields;
  std::map<std::pair<Index, Index>, double> couplings;
  double constant = 0.0;

  /// Spin of qubit i is +1 when x_i = 0.
  double energy(const Solution& x) const;
};

IsingModel qubo_to_ising(const QuboMatrix& q);

/// Layer count p with one (gamma, beta) pair per layer.
class QaoaParams {
 public:
  QaoaParams(std::vector<double> gammas, std::vector<double> betas);
  static QaoaParams uniform(std::size_t p, double gamma, double beta);

  std::size_t p() const noexcept { return gammas_.size(); }
  const std::vector<double>& gammas() const noexcept { return gammas_; }
  const std::vector<double>& betas() const noexcept { return betas_; }

 private:
  std::vector<double> gammas_;
  std::vector<double> betas_;
};

enum class CouplingOrder {
  Ascending,       ///< couplings in ascending (i, k) order
  ParallelPacked,  ///< greedy rounds of qubit-disjoint couplings
  EdgeColored,     ///< color classes of edge_coloring, lowest color first
};

/// "ascending", "packed", "colored".
std::string to_string(CouplingOrder order);
CouplingOrder parse_coupling_order(std::string_view name);

/// Nonzero couplings of the Ising model in emission order.
std::vector<std::pair<std::pair<Index, Index>, double>> ordered_couplings(
    const IsingModel& ising, CouplingOrder order);

/// Cost layer exp(-i gamma H_C) up to global phase: RZ(2 gamma h_i) per
/// nonzero field, then CNOT(i,k) RZ_k(2 gamma J_ik) CNOT(i,k) per coupling.
void append_cost_layer(GateList& circuit, const IsingModel& ising, double gamma,
                       CouplingOrder order = CouplingOrder::Ascending);

/// H on every qubit, then per layer the cost layer and RX(2 beta) on every
/// qubit. Uses exactly 2 * coupling_count(q) * p CNOTs. With EdgeColored
/// and a coloring of D colors the depth is at most 1 + p (3 D + 2).
GateList build_circuit(const QuboMatrix& q, const QaoaParams& params,
                       CouplingOrder order = CouplingOrder::Ascending);

std::size_t cnot_count(const GateList& circuit);

/// ASAP schedule length: each gate takes one step on all of its operands.
std::size_t depth(const GateList& circuit);

inline constexpr std::size_t kStatevectorLimit = 20;

/// Amplitude <x| U |x> of the circuit U applied to basis state |x>, by dense
/// statevector evolution. With cost_only the circuit must consist of RZ and
/// CNOT gates and must map |x> back onto itself, so the result is a pure
/// phase.
std::complex<double> basis_phase(const GateList& circuit, const Solution& x,
                                 bool cost_only,
                                 std::size_t limit = kStatevectorLimit);

/// "qubits n" header, then "H q", "RX q angle", "RZ q angle", "CNOT c t"
/// lines. Angles use 17 significant digits.
std::string to_text(const GateList& circuit);
GateList parse_gate_list(std::string_view text);

}  // namespace semisym
