#include "fracfactor/factor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace fracfactor {

FactorBounds::FactorBounds(int lower, int upper) : a(lower), b(upper) {
  if (a < 1 || b < a) throw std::invalid_argument("factor bounds need 1 <= a <= b");
}

DegreeBounds::DegreeBounds(std::vector<int> f, std::vector<int> g)
    : lower(std::move(f)), upper(std::move(g)) {
  if (lower.size() != upper.size()) throw std::invalid_argument("degree bounds size mismatch");
  for (std::size_t x = 0; x < lower.size(); ++x)
    if (lower[x] < 0 || lower[x] > upper[x])
      throw std::invalid_argument("degree bounds need 0 <= f(x) <= g(x)");
}

DegreeBounds DegreeBounds::uniform(int order, const FactorBounds& bounds) {
  return DegreeBounds(std::vector<int>(static_cast<std::size_t>(order), bounds.a),
                      std::vector<int>(static_cast<std::size_t>(order), bounds.b));
}

const Rational& IndicatorAssignment::weight(Edge e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) throw GraphError("edge not in assignment");
  return weights[static_cast<std::size_t>(it - edges.begin())];
}

VertexSet low_degree_set(const Graph& g, const VertexSet& S, int a) {
  check_subset(g, S);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.order(); ++x)
    if (!S.contains(x) && degree_in_complement(g, S, x) <= a) out.push_back(x);
  return VertexSet(std::move(out));
}

int epsilon(const Graph& g, const VertexSet& S, const VertexSet& T, int a) {
  if (!is_independent(g, S)) return 2;
  for (Vertex u : S) {
    for (Vertex v : g.neighbors(u)) {
      if (T.contains(v) && degree_in_complement(g, S, v) == a) return 1;
      if (!T.contains(v)) return 1;  // v lies in V - (S u T); S is independent
    }
  }
  return 0;
}

DeficiencyWitness deficiency(const Graph& g, const VertexSet& S, const FactorBounds& bounds) {
  DeficiencyWitness w;
  w.S = S;
  w.T = low_degree_set(g, S, bounds.a);
  long sum = 0;
  for (Vertex x : w.T) sum += degree_in_complement(g, S, x);
  w.delta = static_cast<long>(bounds.b) * static_cast<long>(S.size()) -
            static_cast<long>(bounds.a) * static_cast<long>(w.T.size()) + sum;
  w.epsilon = epsilon(g, S, w.T, bounds.a);
  return w;
}

namespace {

enum class Condition { Covered, Factor };

// Bitmask scan over all S in canonical order.
std::optional<DeficiencyWitness> first_violation(const Graph& g, const FactorBounds& bounds,
                                                 const StructuralOptions& opts, Condition cond) {
  const int n = g.order();
  if (n > opts.max_order || n > 63)
    throw CapabilityError("structural check: graph order " + std::to_string(n) +
                          " exceeds exhaustion cap " + std::to_string(std::min(opts.max_order, 63)));
  using Mask = std::uint64_t;
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  const long a = bounds.a;
  const long b = bounds.b;
  // Every x outside S has d_{G-S}(x) >= d_G(x) - |S|, so
  //   delta >= b s - sum_x min(a, max(0, a - d_G(x) + s)),
  // and a size class whose bound already reaches the largest possible
  // epsilon holds no violation. This subsumes the cut b s >= a n + 2.
  auto size_class_clear = [&](int s) {
    long deficit = 0;
    for (Vertex x = 0; x < n; ++x) deficit += std::min(a, std::max(0L, a - g.degree(x) + s));
    const long eps_max = cond == Condition::Factor ? 0 : std::min(s, 2);
    return b * s - deficit >= eps_max;
  };

  auto check = [&](Mask S, int s) -> std::optional<DeficiencyWitness> {
    Mask T = 0, T_at_a = 0, S_nbrs = 0;
    long sum = 0;
    bool independent = true;
    for (Vertex v = 0; v < n; ++v) {
      const Mask bit = Mask{1} << v;
      if (S & bit) {
        S_nbrs |= adj[v];
        if (adj[v] & S) independent = false;
        continue;
      }
      const int d = std::popcount(adj[v] & ~S);
      if (d <= a) {
        T |= bit;
        sum += d;
        if (d == a) T_at_a |= bit;
      }
    }
    const long delta = b * s - a * std::popcount(T) + sum;
    int eps = 0;
    if (cond == Condition::Covered) {
      if (!independent)
        eps = 2;
      else if ((S_nbrs & T_at_a) || (S_nbrs & ~(S | T) & full))
        eps = 1;
    }
    if (delta > eps - 1) return std::nullopt;
    return DeficiencyWitness{VertexSet::from_mask(S), VertexSet::from_mask(T), delta, eps};
  };

  std::vector<int> idx;
  for (int s = 0; s <= n; ++s) {
    if (opts.prune && size_class_clear(s)) continue;
    idx.resize(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      Mask S = 0;
      for (int v : idx) S |= Mask{1} << v;
      if (auto w = check(S, s)) return w;
      // Next s-combination in lexicographic order.
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

Verdict structural_verdict(std::optional<DeficiencyWitness> w) {
  Verdict v;
  v.holds = !w.has_value();
  v.witness = std::move(w);
  return v;
}

IndicatorAssignment extend_forced(const Graph& g, const Graph& reduced,
                                  const std::vector<Rational>& x, Edge forced) {
  IndicatorAssignment h{g.edges(), std::vector<Rational>(g.size())};
  for (std::size_t i = 0; i < reduced.edges().size(); ++i)
    h.weights[static_cast<std::size_t>(g.edge_index(reduced.edges()[i]))] = x[i];
  h.weights[static_cast<std::size_t>(g.edge_index(forced))] = 1;
  return h;
}

void check_bounds_order(const Graph& g, const DegreeBounds& db) {
  if (db.order() != g.order()) throw std::invalid_argument("degree bounds do not match graph order");
}

void check_forced(const Graph& g, std::optional<Edge> forced) {
  if (forced && g.edge_index(*forced) < 0) throw GraphError("forced edge is not an edge of the graph");
}

}  // namespace

Verdict is_covered_structural(const Graph& g, const FactorBounds& bounds,
                              const StructuralOptions& opts) {
  return structural_verdict(first_violation(g, bounds, opts, Condition::Covered));
}

Verdict has_factor_structural(const Graph& g, const FactorBounds& bounds,
                              const StructuralOptions& opts) {
  return structural_verdict(first_violation(g, bounds, opts, Condition::Factor));
}

LinearSystem factor_system(const Graph& g, const DegreeBounds& db) {
  check_bounds_order(g, db);
  const auto& edges = g.edges();
  LinearSystem sys;
  sys.variables = static_cast<int>(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Rational> row(edges.size());
    row[i] = 1;
    sys.add_row(std::move(row), 1);
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<Rational> row(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].u == x || edges[i].v == x) row[i] = 1;
    sys.add_row(row, db.upper[x]);
    for (auto& r : row) r = -r;
    sys.add_row(std::move(row), -db.lower[x]);
  }
  return sys;
}

ForcedReduction reduce_forced(const Graph& g, const DegreeBounds& db, Edge e) {
  check_bounds_order(g, db);
  check_forced(g, e);
  std::vector<int> f = db.lower;
  std::vector<int> up = db.upper;
  for (Vertex x : {e.u, e.v}) {
    if (up[x] < 1) throw std::invalid_argument("forced edge endpoint has g(x) = 0");
    f[x] = std::max(0, f[x] - 1);
    up[x] = up[x] - 1;
  }
  const Edge removed[] = {e};
  ForcedReduction r{g.without_edges(removed), DegreeBounds(std::move(f), std::move(up))};
  return r;
}

namespace {

// An endpoint with g(x) = 0 cannot carry h(e) = 1.
bool forced_blocked(const DegreeBounds& db, Edge e) {
  return db.upper[e.u] < 1 || db.upper[e.v] < 1;
}

}  // namespace

std::optional<IndicatorAssignment> find_factor_lp(const Graph& g, const DegreeBounds& db,
                                                  std::optional<Edge> forced) {
  check_bounds_order(g, db);
  check_forced(g, forced);
  if (!forced) {
    auto x = find_feasible_point(factor_system(g, db));
    if (!x) return std::nullopt;
    return IndicatorAssignment{g.edges(), std::move(*x)};
  }
  if (forced_blocked(db, *forced)) return std::nullopt;
  const ForcedReduction r = reduce_forced(g, db, *forced);
  auto x = find_feasible_point(factor_system(r.graph, r.bounds));
  if (!x) return std::nullopt;
  return extend_forced(g, r.graph, *x, *forced);
}

namespace {

// The system whose infeasibility certifies that no factor (with h(forced)=1)
// exists. A blocked forced edge keeps the edge as a variable pinned to 1.
LinearSystem certificate_system(const Graph& g, const DegreeBounds& db,
                                std::optional<Edge> forced) {
  if (!forced) return factor_system(g, db);
  if (forced_blocked(db, *forced)) {
    LinearSystem sys = factor_system(g, db);
    std::vector<Rational> row(g.size());
    row[static_cast<std::size_t>(g.edge_index(*forced))] = -1;
    sys.add_row(std::move(row), -1);
    return sys;
  }
  const ForcedReduction r = reduce_forced(g, db, *forced);
  return factor_system(r.graph, r.bounds);
}

}  // namespace

InfeasibilityCertificate infeasibility_certificate(const Graph& g, const DegreeBounds& db,
                                                   std::optional<Edge> forced) {
  check_bounds_order(g, db);
  check_forced(g, forced);
  auto y = farkas_certificate(certificate_system(g, db, forced));
  if (!y) throw std::logic_error("instance is feasible; no infeasibility certificate exists");
  return InfeasibilityCertificate{forced, std::move(*y)};
}

bool verify_infeasibility(const Graph& g, const DegreeBounds& db,
                          const InfeasibilityCertificate& cert) {
  if (cert.forced && g.edge_index(*cert.forced) < 0) return false;
  return verify_farkas(certificate_system(g, db, cert.forced), cert.multipliers);
}

namespace {

template <typename Search>
Verdict per_edge_verdict(const Graph& g, const DegreeBounds& db, Search&& search,
                         bool certify) {
  Verdict v;
  if (g.size() == 0) {
    auto h = search(std::optional<Edge>{});
    v.holds = h.has_value();
    if (h)
      v.assignments.push_back(std::move(*h));
    else if (certify)
      v.infeasibility = infeasibility_certificate(g, db);
    return v;
  }
  for (const Edge& e : g.edges()) {
    auto h = search(std::optional<Edge>{e});
    if (!h) {
      v.holds = false;
      v.failing_edge = e;
      v.assignments.clear();
      if (certify) v.infeasibility = infeasibility_certificate(g, db, e);
      return v;
    }
    v.assignments.push_back(std::move(*h));
  }
  v.holds = true;
  return v;
}

}  // namespace

Verdict is_covered_oracle(const Graph& g, const FactorBounds& bounds) {
  const DegreeBounds db = DegreeBounds::uniform(g.order(), bounds);
  return per_edge_verdict(
      g, db, [&](std::optional<Edge> e) { return find_factor_lp(g, db, e); }, true);
}

Verdict has_factor_oracle(const Graph& g, const FactorBounds& bounds) {
  const DegreeBounds db = DegreeBounds::uniform(g.order(), bounds);
  Verdict v;
  auto h = find_factor_lp(g, db);
  v.holds = h.has_value();
  if (h)
    v.assignments.push_back(std::move(*h));
  else
    v.infeasibility = infeasibility_certificate(g, db);
  return v;
}

namespace {

// Depth-first search in half units (0, 1, 2) with per-vertex interval pruning.
class HalfIntegralSearch {
 public:
  HalfIntegralSearch(const Graph& g, const DegreeBounds& db, std::optional<Edge> forced)
      : g_(g), edges_(g.edges()), value_(edges_.size(), 0),
        sum_(static_cast<std::size_t>(g.order()), 0),
        open_(static_cast<std::size_t>(g.order()), 0),
        lo_(static_cast<std::size_t>(g.order())), hi_(static_cast<std::size_t>(g.order())),
        forced_(forced ? g.edge_index(*forced) : -1) {
    for (Vertex x = 0; x < g.order(); ++x) {
      lo_[x] = 2 * db.lower[x];
      hi_[x] = 2 * db.upper[x];
      open_[x] = g.degree(x);
    }
  }

  bool run() {
    for (Vertex x = 0; x < g_.order(); ++x)
      if (!viable(x)) return false;
    return descend(0);
  }

  IndicatorAssignment assignment() const {
    IndicatorAssignment h{edges_, {}};
    for (int v : value_) h.weights.emplace_back(v, 2);
    for (auto& w : h.weights) w.canonicalize();
    return h;
  }

 private:
  bool viable(Vertex x) const { return sum_[x] <= hi_[x] && sum_[x] + 2 * open_[x] >= lo_[x]; }

  bool descend(std::size_t i) {
    if (i == edges_.size()) return true;
    const Edge e = edges_[i];
    static constexpr int kOrder[] = {2, 0, 1};
    for (int v : kOrder) {
      if (forced_ == static_cast<int>(i) && v != 2) continue;
      value_[i] = v;
      sum_[e.u] += v;
      sum_[e.v] += v;
      --open_[e.u];
      --open_[e.v];
      if (viable(e.u) && viable(e.v) && descend(i + 1)) return true;
      sum_[e.u] -= v;
      sum_[e.v] -= v;
      ++open_[e.u];
      ++open_[e.v];
    }
    value_[i] = 0;
    return false;
  }

  const Graph& g_;
  const std::vector<Edge>& edges_;
  std::vector<int> value_;
  std::vector<int> sum_;
  std::vector<int> open_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  int forced_;
};

}  // namespace

std::optional<IndicatorAssignment> half_integral_search(const Graph& g, const DegreeBounds& db,
                                                        std::optional<Edge> forced,
                                                        int max_edges) {
  check_bounds_order(g, db);
  check_forced(g, forced);
  if (static_cast<int>(g.size()) > max_edges)
    throw CapabilityError("half-integral search: " + std::to_string(g.size()) +
                          " edges exceed cap " + std::to_string(max_edges));
  HalfIntegralSearch search(g, db, forced);
  if (!search.run()) return std::nullopt;
  return search.assignment();
}

Verdict is_covered_half_integral(const Graph& g, const FactorBounds& bounds, int max_edges) {
  const DegreeBounds db = DegreeBounds::uniform(g.order(), bounds);
  return per_edge_verdict(
      g, db, [&](std::optional<Edge> e) { return half_integral_search(g, db, e, max_edges); },
      false);
}

bool validate_indicator(const Graph& g, const IndicatorAssignment& h, const DegreeBounds& db) {
  check_bounds_order(g, db);
  if (h.edges != g.edges() || h.weights.size() != h.edges.size())
    throw std::invalid_argument("indicator assignment is not defined on exactly E(G)");
  std::vector<Rational> sum(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Rational& w = h.weights[i];
    if (w < 0 || w > 1) return false;
    sum[h.edges[i].u] += w;
    sum[h.edges[i].v] += w;
  }
  for (Vertex x = 0; x < g.order(); ++x)
    if (sum[x] < db.lower[x] || sum[x] > db.upper[x]) return false;
  return true;
}

}  // namespace fracfactor
