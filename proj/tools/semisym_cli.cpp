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

// Command-line front end: encode graphs, factor semi-symmetries, verify
// energy landscapes, build QAOA circuits and run the experiment sweeps.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semisym/encoders.hpp"
#include "semisym/errors.hpp"
#include "semisym/factoring.hpp"
#include "semisym/graph.hpp"
#include "semisym/harness.hpp"
#include "semisym/qaoa.hpp"
#include "semisym/qubo.hpp"

namespace {

using namespace semisym;

ZMode parse_z(const std::string& text) {
  if (text == "proposition") return ZMode::proposition();
  std::size_t pos = 0;
  double z = 0.0;
  try {
    z = std::stod(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || !(z > 0.0)) {
    throw ParameterError("--z must be 'proposition' or a positive number");
  }
  return ZMode::value(z);
}

PairMode parse_pair_mode(const std::string& text) {
  if (text == "isomorphic") return PairMode::Isomorphic;
  if (text == "independent") return PairMode::Independent;
  throw ParameterError("pair mode must be 'isomorphic' or 'independent'");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

std::string bits(const Solution& x) {
  std::string s;
  for (Index i = 0; i < x.size(); ++i) s += x[i] ? '1' : '0';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-symmetry factoring for QUBO / QAOA circuits"};
  app.require_subcommand(1);

  // graph --------------------------------------------------------------------
  auto* graph_cmd = app.add_subcommand("graph", "Sample a uniform random graph");
  std::size_t g_v = 0, g_e = 0;
  std::uint64_t g_seed = 0;
  std::string g_out, g_out2, g_pair = "isomorphic";
  graph_cmd->add_option("--v", g_v, "Vertex count")->required();
  graph_cmd->add_option("--e", g_e, "Edge count")->required();
  graph_cmd->add_option("--seed", g_seed, "Sampling seed");
  graph_cmd->add_option("--out", g_out, "Edge-list output (default stdout)");
  graph_cmd->add_option("--out2", g_out2, "Also write a second graph for isomorphism");
  graph_cmd->add_option("--pair-mode", g_pair, "isomorphic | independent");

  // encode -------------------------------------------------------------------
  auto* encode_cmd = app.add_subcommand("encode", "Encode a graph problem as a QUBO");
  std::string e_problem, e_graph, e_graph2, e_out;
  std::size_t e_k = 3;
  double e_penalty = 3.0;
  encode_cmd->add_option("--problem", e_problem,
                         "max_clique | hamilton_cycles | graph_coloring | "
                         "vertex_cover | graph_isomorphism")
      ->required();
  encode_cmd->add_option("--graph", e_graph, "Edge-list file")->required();
  encode_cmd->add_option("--graph2", e_graph2, "Second graph (graph_isomorphism)");
  encode_cmd->add_option("--k", e_k, "Colors for graph_coloring");
  encode_cmd->add_option("--penalty", e_penalty, "Penalty weight A");
  encode_cmd->add_option("--out", e_out, "QUBO JSON output (default stdout)");

  // factor -------------------------------------------------------------------
  auto* factor_cmd = app.add_subcommand("factor", "Factor semi-symmetries into ancillas");
  std::string f_qubo, f_out, f_report, f_z = "proposition";
  std::size_t f_ancillas = 29;
  bool f_exclude_diag = false;
  factor_cmd->add_option("--qubo", f_qubo, "QUBO JSON input")->required();
  factor_cmd->add_option("--ancillas", f_ancillas, "Ancilla budget");
  factor_cmd->add_option("--z", f_z, "'proposition' or a positive penalty");
  factor_cmd->add_flag("--exclude-diagonal", f_exclude_diag,
                       "Leave the diagonal out of the conflict row sums");
  factor_cmd->add_option("--out", f_out, "Modified QUBO JSON (default stdout)");
  factor_cmd->add_option("--report", f_report, "Factoring report JSON");

  // verify -------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Brute-force energy landscape check");
  std::string v_qubo, v_mod, v_report;
  std::size_t v_limit = kDefaultEnumerationLimit;
  bool v_require = false;
  verify_cmd->add_option("--qubo", v_qubo, "Original QUBO JSON")->required();
  verify_cmd->add_option("--modified", v_mod, "Modified QUBO JSON")->required();
  verify_cmd->add_option("--report", v_report, "Factoring report JSON")->required();
  verify_cmd->add_option("--limit", v_limit, "Enumeration guard in bits");
  verify_cmd->add_flag("--require-all", v_require, "Exit 1 unless all checks hold");

  // spectrum -----------------------------------------------------------------
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Sorted energy spectrum");
  std::string s_qubo;
  std::optional<std::size_t> s_base_n;
  std::size_t s_limit = kDefaultEnumerationLimit;
  std::size_t s_top = 0;
  spectrum_cmd->add_option("--qubo", s_qubo, "QUBO JSON input")->required();
  spectrum_cmd->add_option("--base-n", s_base_n,
                           "Treat qubits >= base-n as ancillas and minimize them out");
  spectrum_cmd->add_option("--limit", s_limit, "Enumeration guard in bits");
  spectrum_cmd->add_option("--top", s_top, "Print only the lowest entries");

  // circuit ------------------------------------------------------------------
  auto* circuit_cmd = app.add_subcommand("circuit", "Build the QAOA gate list");
  std::string c_qubo, c_out;
  std::size_t c_p = 1;
  double c_gamma = 0.5, c_beta = 0.25;
  std::string c_order = "ascending";
  circuit_cmd->add_option("--qubo", c_qubo, "QUBO JSON input")->required();
  circuit_cmd->add_option("--p", c_p, "Layer count");
  circuit_cmd->add_option("--gamma", c_gamma, "Cost angle for every layer");
  circuit_cmd->add_option("--beta", c_beta, "Mixer angle for every layer");
  circuit_cmd->add_option("--order", c_order, "ascending | packed | colored");
  circuit_cmd->add_option("--out", c_out, "Gate list output; summary goes to stdout");

  // sweep --------------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the ancilla/depth sweep");
  std::string w_problem = "all", w_z = "proposition", w_out, w_pair = "isomorphic";
  std::string w_setting = "all";
  std::vector<std::uint64_t> w_seeds{kDefaultSeeds.begin(), kDefaultSeeds.end()};
  std::vector<std::size_t> w_p{1, 2, 3};
  std::size_t w_max = 29, w_jobs = 1;
  double w_penalty = 3.0;
  std::string w_order = "colored";
  bool w_summary = false;
  sweep_cmd->add_option("--problem", w_problem, "Problem name or 'all'");
  sweep_cmd->add_option("--setting-index", w_setting, "0, 1, 2 or 'all'");
  sweep_cmd->add_option("--seeds", w_seeds, "Graph seeds")->delimiter(',');
  sweep_cmd->add_option("--max-ancillas", w_max, "Largest ancilla budget");
  sweep_cmd->add_option("--p", w_p, "Layer counts")->delimiter(',');
  sweep_cmd->add_option("--z", w_z, "'proposition' or a positive penalty");
  sweep_cmd->add_option("--penalty", w_penalty, "Encoder penalty weight A");
  sweep_cmd->add_option("--pair-mode", w_pair, "isomorphic | independent");
  sweep_cmd->add_option("--order", w_order, "ascending | packed | colored");
  sweep_cmd->add_option("--jobs", w_jobs, "Worker threads");
  sweep_cmd->add_option("--out", w_out, "CSV output (default stdout)");
  sweep_cmd->add_flag("--summary", w_summary, "Print per-group mean/std to stderr");

  // pareto -------------------------------------------------------------------
  auto* pareto_cmd = app.add_subcommand("pareto", "Pareto front of ancillas vs couplings");
  std::string p_csv, p_out;
  pareto_cmd->add_option("--csv", p_csv, "Sweep CSV input")->required();
  pareto_cmd->add_option("--out", p_out, "CSV output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*graph_cmd) {
      if (g_out2.empty()) {
        emit(g_out, to_edge_list(sample_graph(g_v, g_e, g_seed)));
      } else {
        const auto [g1, g2] = sample_graph_pair(g_v, g_e, g_seed, parse_pair_mode(g_pair));
        emit(g_out, to_edge_list(g1));
        emit(g_out2, to_edge_list(g2));
      }
    } else if (*encode_cmd) {
      const auto kind = parse_problem_kind(e_problem);
      const PenaltyWeight a(e_penalty);
      const Graph g = read_edge_list_file(e_graph);
      QuboMatrix q;
      switch (kind) {
        case ProblemKind::MaxClique: q = max_clique_qubo(g, a); break;
        case ProblemKind::HamiltonCycles: q = hamilton_cycle_qubo(g, a); break;
        case ProblemKind::GraphColoring: q = graph_coloring_qubo(g, e_k, a); break;
        case ProblemKind::VertexCover: q = vertex_cover_qubo(g, a); break;
        case ProblemKind::GraphIsomorphism:
          if (e_graph2.empty()) throw ParameterError("graph_isomorphism needs --graph2");
          q = graph_isomorphism_qubo(g, read_edge_list_file(e_graph2), a);
          break;
      }
      emit(e_out, qubo_to_json(q) + "\n");
    } else if (*factor_cmd) {
      const QuboMatrix q = read_qubo_file(f_qubo);
      FactoringOptions options;
      if (f_exclude_diag) options.row_sum = RowSum::ExcludeDiagonal;
      const auto result = factor_out(q, f_ancillas, parse_z(f_z).resolve(q), options);
      emit(f_out, qubo_to_json(result.matrix) + "\n");
      if (!f_report.empty()) write_report_file(f_report, result.report);
      std::cerr << "ancillas " << result.report.steps.size() << ", couplings "
                << coupling_count(q) << " -> " << coupling_count(result.matrix)
                << ", qubits " << q.n() << " -> " << result.matrix.n() << '\n';
    } else if (*verify_cmd) {
      const auto v = verify_equivalence(read_qubo_file(v_qubo), read_qubo_file(v_mod),
                                        read_report_file(v_report), v_limit);
      std::cout << "valid_preserved " << std::boolalpha << v.valid_preserved << '\n'
                << "invalid_not_decreased " << v.invalid_not_decreased << '\n'
                << "global_min_preserved " << v.global_min_preserved << '\n'
                << "valid " << v.valid_count << '\n'
                << "invalid " << v.invalid_count << '\n'
                << "decreased " << v.decreased_count << '\n'
                << "original_min " << v.original_min << '\n'
                << "modified_min " << v.modified_min << '\n';
      if (v_require && !v.all()) return 1;
    } else if (*spectrum_cmd) {
      const QuboMatrix q = read_qubo_file(s_qubo);
      std::ostringstream out;
      out << std::setprecision(17);
      if (s_base_n) {
        if (*s_base_n > q.n() || *s_base_n > s_limit) {
          throw ParameterError("--base-n out of range");
        }
        std::vector<std::pair<double, std::uint64_t>> rows;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << *s_base_n); ++m) {
          const auto x = Solution::from_mask(*s_base_n, m);
          rows.emplace_back(min_energy_over_ancillas(q, *s_base_n, x, s_limit), m);
        }
        std::sort(rows.begin(), rows.end());
        std::size_t shown = 0;
        for (const auto& [e, m] : rows) {
          if (s_top && shown++ == s_top) break;
          out << bits(Solution::from_mask(*s_base_n, m)) << ' ' << e << '\n';
        }
      } else {
        std::size_t shown = 0;
        for (const auto& entry : spectrum(q, s_limit)) {
          if (s_top && shown++ == s_top) break;
          out << bits(entry.solution) << ' ' << entry.energy << '\n';
        }
      }
      std::cout << out.str();
    } else if (*circuit_cmd) {
      const QuboMatrix q = read_qubo_file(c_qubo);
      const auto circuit =
          build_circuit(q, QaoaParams::uniform(c_p, c_gamma, c_beta),
                        parse_coupling_order(c_order));
      if (c_out.empty()) {
        std::cout << to_text(circuit);
      } else {
        emit(c_out, to_text(circuit));
        std::cout << "qubits " << circuit.n() << "\ncouplings " << coupling_count(q)
                  << "\ncnots " << cnot_count(circuit) << "\ndepth " << depth(circuit)
                  << '\n';
      }
    } else if (*sweep_cmd) {
      std::vector<ProblemSetting> settings;
      for (auto s : builtin_settings(w_seeds)) {
        if (w_problem != "all" && s.problem != parse_problem_kind(w_problem)) continue;
        if (w_setting != "all" && std::to_string(s.index) != w_setting) continue;
        s.penalty = w_penalty;
        settings.push_back(s);
      }
      if (settings.empty()) throw ParameterError("no settings match the filters");
      SweepOptions options;
      options.order = parse_coupling_order(w_order);
      options.pair_mode = parse_pair_mode(w_pair);
      const auto records = run_sweeps(settings, w_max, w_p, parse_z(w_z), options, w_jobs);
      std::ostringstream csv;
      write_csv(csv, records);
      emit(w_out, csv.str());
      if (w_summary) {
        std::cerr << "problem,setting,num_ancillas,p,count,mean_couplings,std_couplings,"
                     "mean_depth,std_depth\n";
        for (const auto& row : aggregate(records)) {
          std::cerr << row.problem << ',' << row.setting << ',' << row.num_ancillas << ','
                    << row.p << ',' << row.count << ',' << row.mean_couplings << ','
                    << row.std_couplings << ',' << row.mean_depth << ',' << row.std_depth
                    << '\n';
        }
      }
    } else if (*pareto_cmd) {
      std::ifstream in(p_csv);
      if (!in) throw FormatError("cannot open " + p_csv);
      const auto records = read_csv(in);
      // Ancillas actually used = qubits above the smallest count seen for the
      // same (problem, setting, seed).
      std::map<std::tuple<std::string, std::size_t, std::uint64_t>, std::size_t> base;
      for (const auto& r : records) {
        auto [it, fresh] = base.try_emplace({r.problem, r.setting, r.seed}, r.qubits);
        if (!fresh) it->second = std::min(it->second, r.qubits);
      }
      std::map<std::pair<std::string, std::size_t>, std::vector<ParetoPoint>> groups;
      for (const auto& r : records) {
        groups[{r.problem, r.setting}].push_back(
            {r.qubits - base.at({r.problem, r.setting, r.seed}), r.couplings});
      }
      std::ostringstream out;
      out << "problem,setting,ancillas,couplings\n";
      for (auto& [key, points] : groups) {
        for (const auto& pt : pareto_front(std::move(points))) {
          out << key.first << ',' << key.second << ',' << pt.ancillas << ','
              << pt.couplings << '\n';
        }
      }
      emit(p_out, out.str());
    }
  } catch (const semisym::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
