#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fracfactor/enumerate.hpp"
#include "fracfactor/factor.hpp"
#include "fracfactor/graph.hpp"
#include "fracfactor/spectral.hpp"

namespace fracfactor {

struct IntRange {
  int lo = 0;
  int hi = -1;  // inclusive

  bool empty() const { return hi < lo; }
};

enum class CaseStatus { Pass, Fail, OutOfHypothesis, NearTie };

const char* to_string(CaseStatus s);

struct CaseRecord {
  CaseStatus status = CaseStatus::Pass;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json verdicts = nlohmann::json::object();
  nlohmann::json margins = nlohmann::json::object();
  nlohmann::json certificate;  // null when absent
  std::vector<std::string> flags;
};

/// Ordered case records plus summary counts; serialises as JSON lines with
/// a trailing summary object.
class Report {
 public:
  explicit Report(std::string campaign_id) : id_(std::move(campaign_id)) {}

  void add(CaseRecord record);
  void append(const Report& other);

  const std::string& id() const { return id_; }
  const std::vector<CaseRecord>& records() const { return records_; }
  std::size_t count(CaseStatus s) const;
  std::size_t total() const { return records_.size(); }
  bool passed() const { return count(CaseStatus::Fail) == 0; }

  nlohmann::json record_json(std::size_t index) const;
  nlohmann::json summary() const;
  void write_jsonl(std::ostream& out) const;
  std::string to_jsonl() const;

 private:
  std::string id_;
  std::vector<CaseRecord> records_;
};

/// Runs body(i) for i in [0, count) on `workers` threads. Callers write
/// results into slot i, so output order never depends on scheduling.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

// ---------------------------------------------------------------- lemmas

/// H_{n,a} is not covered for n >= a+3 (witness S = {}, T = {special
/// vertex}, delta = -1, epsilon = 0) and has no factor for n >= 2a+3.
/// b runs over a + offset for each offset in b_offsets.
Report verify_H_not_covered(IntRange a_range, IntRange n_range, std::vector<int> b_offsets = {0, 1});

/// L-graph spectral sweep over 1 <= a <= a_max, 4a+4 <= n <= n_max: bounds,
/// quotient agreement, quotient eigenvalues inside the full spectrum,
/// closed-form characteristic polynomial values, trace identity.
struct SpectralLemmaOptions {
  int a_max = 6;
  int n_max = 200;
  double tol = 1e-9;
  double quotient_tol = 1e-8;
  double charpoly_tol = 1e-9;
  double near_tie = 1e-7;
  int workers = 1;
};
Report verify_spectral_lemmas(const SpectralLemmaOptions& opts);

/// rho(K_{n-1}) = n-2, q(K_{n-1}) = 2n-4, and rho(H_{n,a}) > n-2,
/// q(H_{n,a}) > 2n-4 over the grid.
Report verify_spectral_ordering(IntRange a_range, IntRange n_range, double tol = 1e-9);

struct BoundsCampaignOptions {
  long graphs = 10'000;
  int n_max = 30;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  int workers = 1;
};
/// Hong and Feng-Yu bounds on random connected graphs, plus tightness on
/// complete graphs K_2..K_{n_max}.
Report verify_spectral_bounds(const BoundsCampaignOptions& opts);

// ---------------------------------------------------- oracle equivalence

struct OracleOptions {
  std::vector<FactorBounds> pairs;
  int half_integral_max_edges = 13;
  StructuralOptions structural;
  int workers = 1;
};

/// Structural vs LP (and per-edge half-integral, within its cap) for
/// coveredness and factor existence, with certificate re-checks and the
/// covered => factor implication.
Report oracle_equivalence_campaign(const std::vector<Graph>& graphs, const OracleOptions& opts);

// ------------------------------------------------------ threshold scans

struct ScanConfig {
  int n = 16;
  int a = 2;
  int b = 2;
  GraphMatrix matrix = GraphMatrix::Adjacency;
  long samples = 10'000;
  int max_removed = 6;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  double near_tie = 1e-7;
  int workers = 1;
};

/// Order at which the spectral theorem for `matrix` applies.
int theorem_order_threshold(GraphMatrix matrix, int a);

/// Dense-sample stress test of "lambda(G) >= lambda(H_{n,a}) implies
/// covered unless G is H_{n,a}". Case 0 is H_{n,a} itself. Below the
/// theorem's order the scan records outcomes without asserting them.
Report spectral_threshold_scan(const ScanConfig& cfg);

// ------------------------------------------------------- Yuan-Hao tests

/// max(d(x), d(y)) >= a(n+1)/(a+b) for every nonadjacent pair.
bool yuan_hao_degree_hypothesis(const Graph& g, int a, int b);
/// Order and minimum-degree side conditions of the degree theorem.
bool yuan_hao_degree_side_conditions(const Graph& g, int a, int b);
/// |N(x_1) u ... u N(x_r)| >= a(n+1)/(a+b) for every independent r-set.
bool yuan_hao_neighborhood_hypothesis(const Graph& g, int a, int b, int r);
bool yuan_hao_neighborhood_side_conditions(const Graph& g, int a, int b, int r);

struct YuanHaoOptions {
  int n = 14;
  int a = 2;  // the degree form needs a >= 3
  int b = 2;
  int r = 2;  // neighborhood form; 0 selects the degree form
  long samples = 1'000;
  int max_removed = 40;
  std::uint64_t seed = 7;
  int workers = 1;
};
Report yuan_hao_campaign(const YuanHaoOptions& opts);

}  // namespace fracfactor
