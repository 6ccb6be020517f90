#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "fracfactor/exact_lp.hpp"
#include "fracfactor/graph.hpp"

namespace fracfactor {

/// Raised when an exhaustive decider is asked to go past its cap.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FactorBounds {
  int a;
  int b;

  FactorBounds(int lower, int upper);
};

/// Per-vertex bounds f(x) <= sum of h over E(x) <= g(x).
struct DegreeBounds {
  std::vector<int> lower;
  std::vector<int> upper;

  DegreeBounds(std::vector<int> f, std::vector<int> g);
  static DegreeBounds uniform(int order, const FactorBounds& bounds);
  int order() const { return static_cast<int>(lower.size()); }
};

struct DeficiencyWitness {
  VertexSet S;
  VertexSet T;
  long delta = 0;  // b|S| - a|T| + sum over T of d_{G-S}
  int epsilon = 0;

  bool violates() const { return delta <= epsilon - 1; }
};

/// Edge weights aligned with `edges`.
struct IndicatorAssignment {
  std::vector<Edge> edges;
  std::vector<Rational> weights;

  const Rational& weight(Edge e) const;
};

/// Farkas multipliers for factor_system() of the (possibly edge-reduced)
/// instance. `forced` names the edge whose reduction was used, if any.
struct InfeasibilityCertificate {
  std::optional<Edge> forced;
  std::vector<Rational> multipliers;
};

struct Verdict {
  bool holds = false;
  std::optional<DeficiencyWitness> witness;
  std::optional<Edge> failing_edge;
  std::optional<InfeasibilityCertificate> infeasibility;
  std::vector<IndicatorAssignment> assignments;  // one per edge when covered
};

VertexSet low_degree_set(const Graph& g, const VertexSet& S, int a);
int epsilon(const Graph& g, const VertexSet& S, const VertexSet& T, int a);
DeficiencyWitness deficiency(const Graph& g, const VertexSet& S, const FactorBounds& bounds);

struct StructuralOptions {
  int max_order = 20;
  bool prune = true;
};

/// delta(S,T) >= epsilon(S) for every S, scanned by increasing |S| and
/// lexicographically within a size; the first violation is the witness.
Verdict is_covered_structural(const Graph& g, const FactorBounds& bounds,
                              const StructuralOptions& opts = {});
/// b|S| - a|T| + sum over T of d_{G-S} >= 0 for every S.
Verdict has_factor_structural(const Graph& g, const FactorBounds& bounds,
                              const StructuralOptions& opts = {});

/// Rows h_e <= 1, sum <= g(x), -sum <= -f(x) over variables g.edges().
LinearSystem factor_system(const Graph& g, const DegreeBounds& db);

struct ForcedReduction {
  Graph graph;  // g - e
  DegreeBounds bounds;
};
/// Fixing h(e) = 1: delete e and lower both endpoint bounds by one
/// (clamping f at zero).
ForcedReduction reduce_forced(const Graph& g, const DegreeBounds& db, Edge e);

/// Exact LP search for a fractional (f,g)-factor, optionally with
/// h(forced) = 1. The assignment is over g.edges().
std::optional<IndicatorAssignment> find_factor_lp(const Graph& g, const DegreeBounds& db,
                                                  std::optional<Edge> forced = std::nullopt);

InfeasibilityCertificate infeasibility_certificate(const Graph& g, const DegreeBounds& db,
                                                   std::optional<Edge> forced = std::nullopt);
bool verify_infeasibility(const Graph& g, const DegreeBounds& db,
                          const InfeasibilityCertificate& cert);

/// Per-edge LP oracle for coveredness. An edgeless graph is judged by
/// factor existence alone.
Verdict is_covered_oracle(const Graph& g, const FactorBounds& bounds);
Verdict has_factor_oracle(const Graph& g, const FactorBounds& bounds);

/// Exhaustive search over h in {0, 1/2, 1}^E.
std::optional<IndicatorAssignment> half_integral_search(const Graph& g, const DegreeBounds& db,
                                                        std::optional<Edge> forced = std::nullopt,
                                                        int max_edges = 13);
Verdict is_covered_half_integral(const Graph& g, const FactorBounds& bounds, int max_edges = 13);

bool validate_indicator(const Graph& g, const IndicatorAssignment& h, const DegreeBounds& db);

}  // namespace fracfactor
