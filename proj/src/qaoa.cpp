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

#include "semisym/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "semisym/coloring.hpp"
#include "semisym/errors.hpp"

namespace semisym {

void GateList::add(const Gate& g) {
  if (g.qubit >= n_ || (g.kind == GateKind::CNOT && g.target >= n_)) {
    throw DimensionError("gate operand out of range for " + std::to_string(n_) +
                         " qubits");
  }
  if (g.kind == GateKind::CNOT && g.qubit == g.target) {
    throw ParameterError("CNOT needs two distinct qubits");
  }
  gates_.push_back(g);
}

double IsingModel::energy(const Solution& x) const {
  if (x.size() != n) throw DimensionError("solution length does not match n");
  auto spin = [&](Index i) { return x[i] ? -1.0 : 1.0; };
  double e = constant;
  for (Index i = 0; i < n; ++i) e += fields[i] * spin(i);
  for (const auto& [k, j] : couplings) e += j * spin(k.first) * spin(k.second);
  return e;
}

IsingModel qubo_to_ising(const QuboMatrix& q) {
  IsingModel ising;
  ising.n = q.n();
  ising.fields.assign(q.n(), 0.0);
  ising.constant = q.offset();
  for (const auto& [k, v] : q.entries()) {
    const auto [i, j] = k;
    if (i == j) {
      // v x = v/2 - (v/2) s
      ising.fields[i] -= v / 2.0;
      ising.constant += v / 2.0;
    } else {
      // v x_i x_j = (v/4)(1 - s_i - s_j + s_i s_j)
      ising.couplings[k] += v / 4.0;
      ising.fields[i] -= v / 4.0;
      ising.fields[j] -= v / 4.0;
      ising.constant += v / 4.0;
    }
  }
  return ising;
}

QaoaParams::QaoaParams(std::vector<double> gammas, std::vector<double> betas)
    : gammas_(std::move(gammas)), betas_(std::move(betas)) {
  if (gammas_.size() != betas_.size()) {
    throw ParameterError("gammas and betas must have the same length");
  }
  if (gammas_.empty()) throw ParameterError("QAOA needs at least one layer");
}

QaoaParams QaoaParams::uniform(std::size_t p, double gamma, double beta) {
  return QaoaParams(std::vector<double>(p, gamma), std::vector<double>(p, beta));
}

namespace {

using CouplingList = std::vector<std::pair<std::pair<Index, Index>, double>>;

CouplingList packed_order(const CouplingList& ascending, std::size_t n) {
  CouplingList remaining = ascending;
  CouplingList out;
  out.reserve(ascending.size());
  std::vector<std::uint8_t> busy(n, 0);
  while (!remaining.empty()) {
    std::fill(busy.begin(), busy.end(), 0);
    CouplingList deferred;
    for (const auto& c : remaining) {
      const auto [i, k] = c.first;
      if (busy[i] || busy[k]) {
        deferred.push_back(c);
      } else {
        busy[i] = busy[k] = 1;
        out.push_back(c);
      }
    }
    remaining = std::move(deferred);
  }
  return out;
}

CouplingList colored_order(const CouplingList& ascending, std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(ascending.size());
  for (const auto& c : ascending) edges.push_back(c.first);
  const auto colors = edge_coloring(n, edges);
  std::vector<std::size_t> idx(ascending.size());
  for (std::size_t t = 0; t < idx.size(); ++t) idx[t] = t;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return colors[a] < colors[b]; });
  CouplingList out;
  out.reserve(ascending.size());
  for (std::size_t t : idx) out.push_back(ascending[t]);
  return out;
}

void emit_cost_layer(GateList& circuit, const IsingModel& ising, double gamma,
                     const CouplingList& couplings) {
  if (ising.n > circuit.n()) throw DimensionError("Ising model larger than circuit");
  for (Index i = 0; i < ising.n; ++i) {
    if (ising.fields[i] != 0.0) circuit.add(Gate::rz(i, 2.0 * gamma * ising.fields[i]));
  }
  for (const auto& [k, j] : couplings) {
    circuit.add(Gate::cnot(k.first, k.second));
    circuit.add(Gate::rz(k.second, 2.0 * gamma * j));
    circuit.add(Gate::cnot(k.first, k.second));
  }
}

}  // namespace

std::string to_string(CouplingOrder order) {
  switch (order) {
    case CouplingOrder::Ascending: return "ascending";
    case CouplingOrder::ParallelPacked: return "packed";
    case CouplingOrder::EdgeColored: return "colored";
  }
  return "ascending";
}

CouplingOrder parse_coupling_order(std::string_view name) {
  if (name == "ascending") return CouplingOrder::Ascending;
  if (name == "packed") return CouplingOrder::ParallelPacked;
  if (name == "colored") return CouplingOrder::EdgeColored;
  throw ParameterError("unknown coupling order: " + std::string(name));
}

CouplingList ordered_couplings(const IsingModel& ising, CouplingOrder order) {
  CouplingList couplings;
  for (const auto& c : ising.couplings) {
    if (c.second != 0.0) couplings.push_back(c);
  }
  switch (order) {
    case CouplingOrder::Ascending: break;
    case CouplingOrder::ParallelPacked: return packed_order(couplings, ising.n);
    case CouplingOrder::EdgeColored: return colored_order(couplings, ising.n);
  }
  return couplings;
}

void append_cost_layer(GateList& circuit, const IsingModel& ising, double gamma,
                       CouplingOrder order) {
  emit_cost_layer(circuit, ising, gamma, ordered_couplings(ising, order));
}

GateList build_circuit(const QuboMatrix& q, const QaoaParams& params,
                       CouplingOrder order) {
  const IsingModel ising = qubo_to_ising(q);
  const CouplingList couplings = ordered_couplings(ising, order);
  GateList circuit(q.n());
  for (Index i = 0; i < q.n(); ++i) circuit.add(Gate::h(i));
  for (std::size_t layer = 0; layer < params.p(); ++layer) {
    emit_cost_layer(circuit, ising, params.gammas()[layer], couplings);
    for (Index i = 0; i < q.n(); ++i) {
      circuit.add(Gate::rx(i, 2.0 * params.betas()[layer]));
    }
  }
  return circuit;
}

std::size_t cnot_count(const GateList& circuit) {
  return static_cast<std::size_t>(
      std::count_if(circuit.gates().begin(), circuit.gates().end(),
                    [](const Gate& g) { return g.kind == GateKind::CNOT; }));
}

std::size_t depth(const GateList& circuit) {
  std::vector<std::size_t> ready(circuit.n(), 0);
  std::size_t total = 0;
  for (const Gate& g : circuit.gates()) {
    std::size_t t = ready[g.qubit];
    if (g.kind == GateKind::CNOT) t = std::max(t, ready[g.target]);
    ++t;
    ready[g.qubit] = t;
    if (g.kind == GateKind::CNOT) ready[g.target] = t;
    total = std::max(total, t);
  }
  return total;
}

std::complex<double> basis_phase(const GateList& circuit, const Solution& x,
                                 bool cost_only, std::size_t limit) {
  const std::size_t n = circuit.n();
  if (n > limit || n > 30) {
    throw CapacityError("statevector of " + std::to_string(n) +
                        " qubits exceeds limit " + std::to_string(limit));
  }
  if (x.size() != n) throw DimensionError("basis state length does not match circuit");
  if (cost_only) {
    for (const Gate& g : circuit.gates()) {
      if (g.kind == GateKind::H || g.kind == GateKind::RX) {
        throw ContractError("cost-only evaluation met a non-diagonal gate");
      }
    }
  }

  using Amp = std::complex<double>;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Amp> state(dim, Amp{0.0, 0.0});
  const std::size_t start = static_cast<std::size_t>(x.mask());
  state[start] = 1.0;

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const Gate& g : circuit.gates()) {
    const std::size_t bit = std::size_t{1} << g.qubit;
    switch (g.kind) {
      case GateKind::RZ: {
        const Amp zero = std::polar(1.0, -g.angle / 2.0);
        const Amp one = std::polar(1.0, g.angle / 2.0);
        for (std::size_t s = 0; s < dim; ++s) state[s] *= (s & bit) ? one : zero;
        break;
      }
      case GateKind::RX: {
        const double c = std::cos(g.angle / 2.0);
        const Amp ms{0.0, -std::sin(g.angle / 2.0)};
        for (std::size_t s = 0; s < dim; ++s) {
          if (s & bit) continue;
          const Amp a0 = state[s];
          const Amp a1 = state[s | bit];
          state[s] = c * a0 + ms * a1;
          state[s | bit] = ms * a0 + c * a1;
        }
        break;
      }
      case GateKind::H: {
        for (std::size_t s = 0; s < dim; ++s) {
          if (s & bit) continue;
          const Amp a0 = state[s];
          const Amp a1 = state[s | bit];
          state[s] = inv_sqrt2 * (a0 + a1);
          state[s | bit] = inv_sqrt2 * (a0 - a1);
        }
        break;
      }
      case GateKind::CNOT: {
        const std::size_t target = std::size_t{1} << g.target;
        for (std::size_t s = 0; s < dim; ++s) {
          if ((s & bit) && !(s & target)) std::swap(state[s], state[s | target]);
        }
        break;
      }
    }
  }

  const Amp amplitude = state[start];
  if (cost_only && std::abs(std::abs(amplitude) - 1.0) > 1e-9) {
    throw ContractError("cost-only circuit does not return |x> to itself");
  }
  return amplitude;
}

std::string to_text(const GateList& circuit) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "qubits " << circuit.n() << '\n';
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::H: out << "H " << g.qubit << '\n'; break;
      case GateKind::RX: out << "RX " << g.qubit << ' ' << g.angle << '\n'; break;
      case GateKind::RZ: out << "RZ " << g.qubit << ' ' << g.angle << '\n'; break;
      case GateKind::CNOT: out << "CNOT " << g.qubit << ' ' << g.target << '\n'; break;
    }
  }
  return out.str();
}

GateList parse_gate_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  std::size_t n = 0;
  if (!(in >> word >> n) || word != "qubits") {
    throw FormatError("gate list must start with \"qubits n\"");
  }
  GateList circuit(n);
  std::string line;
  std::getline(in, line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string op;
    if (!(fields >> op)) continue;
    Gate g;
    bool ok = false;
    if (op == "H") {
      g.kind = GateKind::H;
      ok = static_cast<bool>(fields >> g.qubit);
    } else if (op == "RX" || op == "RZ") {
      g.kind = op == "RX" ? GateKind::RX : GateKind::RZ;
      ok = static_cast<bool>(fields >> g.qubit >> g.angle);
    } else if (op == "CNOT") {
      g.kind = GateKind::CNOT;
      ok = static_cast<bool>(fields >> g.qubit >> g.target);
    }
    std::string rest;
    if (!ok || (fields >> rest)) {
      throw FormatError("malformed gate on line " + std::to_string(line_no));
    }
    try {
      circuit.add(g);
    } catch (const Error& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return circuit;
}

}  // namespace semisym
