// Command-line front end for the fractional [a,b]-factor toolkit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracfactor/campaign.hpp"
#include "fracfactor/certificate_json.hpp"
#include "fracfactor/graph6.hpp"

using namespace fracfactor;
using nlohmann::json;

namespace {

// An existing path is read as a graph6 file, anything else parsed inline.
std::vector<Graph> load_graphs(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) return read_graph6_file(source);
  return {from_graph6(source)};
}

std::vector<FactorBounds> parse_pairs(const std::string& text) {
  std::vector<FactorBounds> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--pairs", "expected a,b;a,b;...");
    out.emplace_back(std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1)));
  }
  if (out.empty()) throw CLI::ValidationError("--pairs", "no pairs given");
  return out;
}

GraphMatrix parse_matrix(const std::string& name) {
  return name == "adjacency" ? GraphMatrix::Adjacency : GraphMatrix::SignlessLaplacian;
}

// Writes to --out when given, stdout otherwise.
void emit(const Report& report, const std::string& out_path) {
  if (out_path.empty()) {
    report.write_jsonl(std::cout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  report.write_jsonl(out);
  std::cerr << report.summary().dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for fractional [a,b]-factors and [a,b]-covered graphs"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Print an extremal graph in graph6");
  std::string family = "H";
  int cn = 0, ca = 0;
  bool info = false;
  construct->add_option("--family", family, "H (K_{a-1} join (K_1 u K_{n-a})), L (K_{4a+1} join (K_2 u K_{n-4a-3})) or K")
      ->check(CLI::IsMember({"H", "L", "K"}));
  construct->add_option("-n", cn, "order")->required();
  construct->add_option("-a", ca, "lower bound a");
  construct->add_flag("--info", info, "print degrees and edge count as JSON");

  // spectral
  auto* spectral = app.add_subcommand("spectral", "Largest adjacency or signless Laplacian eigenvalue");
  std::string sp_graph;
  std::string sp_matrix = "adjacency";
  double sp_tol = 1e-10;
  spectral->add_option("--graph6", sp_graph, "graph6 string or file")->required();
  spectral->add_option("--matrix", sp_matrix)->check(CLI::IsMember({"adjacency", "signless-laplacian"}));
  spectral->add_option("--tol", sp_tol)->check(CLI::PositiveNumber);

  // check-covered / check-factor
  std::string ck_graph, ck_method = "structural";
  int ck_a = 0, ck_b = 0;
  bool ck_assignments = false;
  auto add_check = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--graph6", ck_graph, "graph6 string or file")->required();
    sub->add_option("-a", ck_a)->required();
    sub->add_option("-b", ck_b)->required();
    sub->add_option("--method", ck_method)->check(CLI::IsMember({"structural", "lp", "both", "half-integral"}));
    sub->add_flag("--assignments", ck_assignments, "include per-edge indicator functions");
    return sub;
  };
  auto* check_covered = add_check("check-covered", "Decide fractional [a,b]-coveredness");
  auto* check_factor = add_check("check-factor", "Decide fractional [a,b]-factor existence");

  // verify-lemmas
  auto* lemmas = app.add_subcommand("verify-lemmas", "Lemma sweeps over parameter grids");
  SpectralLemmaOptions lemma_opts;
  int h_a_max = 5, h_n_max = 14;
  std::string lemmas_out;
  lemmas->add_option("--a-max", lemma_opts.a_max);
  lemmas->add_option("--n-max", lemma_opts.n_max);
  lemmas->add_option("--tol", lemma_opts.tol)->check(CLI::PositiveNumber);
  lemmas->add_option("--h-a-max", h_a_max);
  lemmas->add_option("--h-n-max", h_n_max);
  lemmas->add_option("--workers", lemma_opts.workers);
  lemmas->add_option("--out", lemmas_out, "JSON lines report path");

  // scan-threshold
  auto* scan = app.add_subcommand("scan-threshold", "Dense-sample stress test of the spectral theorems");
  ScanConfig scan_cfg;
  std::string scan_matrix = "adjacency", scan_out;
  scan->add_option("-n", scan_cfg.n)->required();
  scan->add_option("-a", scan_cfg.a)->required();
  scan->add_option("-b", scan_cfg.b)->required();
  scan->add_option("--samples", scan_cfg.samples);
  scan->add_option("--seed", scan_cfg.seed);
  scan->add_option("--max-removed", scan_cfg.max_removed);
  scan->add_option("--tol", scan_cfg.tol)->check(CLI::PositiveNumber);
  scan->add_option("--matrix", scan_matrix)->check(CLI::IsMember({"adjacency", "signless-laplacian"}));
  scan->add_option("--workers", scan_cfg.workers);
  scan->add_option("--out", scan_out);

  // oracle-equiv
  auto* equiv = app.add_subcommand("oracle-equiv", "Structural vs LP vs half-integral agreement");
  std::string eq_file, eq_pairs = "2,2;2,3", eq_out;
  int eq_enumerate = 0, eq_random = 0, eq_random_n = 12, eq_workers = 1, eq_cap = 13;
  std::uint64_t eq_seed = 1;
  equiv->add_option("--file", eq_file, "graph6 corpus");
  equiv->add_option("--enumerate", eq_enumerate, "all graphs of order <= N (N <= 7)");
  equiv->add_option("--random", eq_random, "random graphs with n <= --random-n-max");
  equiv->add_option("--random-n-max", eq_random_n);
  equiv->add_option("--seed", eq_seed);
  equiv->add_option("--pairs", eq_pairs, "a,b;a,b;...");
  equiv->add_option("--half-integral-cap", eq_cap);
  equiv->add_option("--workers", eq_workers);
  equiv->add_option("--out", eq_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      Graph g = complete(1);
      if (family == "H")
        g = construct_H(cn, ca);
      else if (family == "L")
        g = construct_L(cn, ca).graph;
      else
        g = complete(cn);
      if (info)
        std::cout << json{{"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"degrees", g.degrees()}}.dump()
                  << '\n';
      else
        std::cout << to_graph6(g) << '\n';
      return 0;
    }

    if (*spectral) {
      PowerIterationOptions opts;
      opts.tol = sp_tol;
      const GraphMatrix which = parse_matrix(sp_matrix);
      for (const Graph& g : load_graphs(sp_graph)) {
        json j = {{"graph6", to_graph6(g)}, {"matrix", sp_matrix},
                  {"value", graph_largest_eigenvalue(g, which, opts)}, {"connected", is_connected(g)}};
        if (is_connected(g)) {
          const auto m = which == GraphMatrix::Adjacency ? adjacency<double>(g) : signless_laplacian<double>(g);
          const auto r = largest_eigenvalue(m, opts);
          j["residual"] = r.residual;
          j["iterations"] = r.iterations;
          if (which == GraphMatrix::Adjacency)
            j["hong_bound"] = hong_bound(g);
          else if (g.order() >= 2)
            j["feng_yu_bound"] = feng_yu_bound(g);
        }
        std::cout << j.dump() << '\n';
      }
      return 0;
    }

    if (*check_covered || *check_factor) {
      const bool covered = check_covered->parsed();
      const FactorBounds fb(ck_a, ck_b);
      int status = 0;
      for (const Graph& g : load_graphs(ck_graph)) {
        json j = {{"graph6", to_graph6(g)}, {"a", fb.a}, {"b", fb.b}};
        std::optional<bool> first;
        auto record = [&](const char* key, const Verdict& v) {
          j[key] = verdict_json(v, ck_assignments);
          if (first && *first != v.holds) status = 3;
          first = v.holds;
        };
        if (ck_method == "structural" || ck_method == "both")
          record("structural", covered ? is_covered_structural(g, fb) : has_factor_structural(g, fb));
        if (ck_method == "lp" || ck_method == "both")
          record("lp", covered ? is_covered_oracle(g, fb) : has_factor_oracle(g, fb));
        if (ck_method == "half-integral") {
          if (covered) {
            record("half_integral", is_covered_half_integral(g, fb));
          } else {
            Verdict v;
            auto h = half_integral_search(g, DegreeBounds::uniform(g.order(), fb));
            v.holds = h.has_value();
            if (h) v.assignments.push_back(*h);
            record("half_integral", v);
          }
        }
        j["holds"] = first.value_or(false);
        std::cout << j.dump() << '\n';
      }
      if (status != 0) std::cerr << "methods disagree\n";
      return status;
    }

    if (*lemmas) {
      Report report("lemmas");
      report.append(verify_H_not_covered({2, h_a_max}, {3, h_n_max}));
      report.append(verify_spectral_ordering({2, h_a_max}, {5, h_n_max}, lemma_opts.tol));
      report.append(verify_spectral_lemmas(lemma_opts));
      emit(report, lemmas_out);
      return report.passed() ? 0 : 1;
    }

    if (*scan) {
      scan_cfg.matrix = parse_matrix(scan_matrix);
      const Report report = spectral_threshold_scan(scan_cfg);
      emit(report, scan_out);
      return report.passed() ? 0 : 1;
    }

    if (*equiv) {
      OracleOptions opts;
      opts.pairs = parse_pairs(eq_pairs);
      opts.half_integral_max_edges = eq_cap;
      opts.workers = eq_workers;
      std::vector<Graph> graphs;
      if (!eq_file.empty()) graphs = read_graph6_file(eq_file);
      for (int n = 1; n <= eq_enumerate; ++n)
        for (Graph& g : enumerate_graphs(n, false)) graphs.push_back(std::move(g));
      Rng rng(eq_seed);
      std::uniform_int_distribution<int> order(1, eq_random_n);
      std::uniform_real_distribution<double> density(0.0, 1.0);
      for (int i = 0; i < eq_random; ++i) {
        const int n = order(rng);
        graphs.push_back(random_graph(n, density(rng), rng));
      }
      if (graphs.empty()) throw CLI::ValidationError("oracle-equiv", "no graphs: pass --file, --enumerate or --random");
      const Report report = oracle_equivalence_campaign(graphs, opts);
      emit(report, eq_out);
      return report.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
