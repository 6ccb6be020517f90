#include "fracfactor/spectral.hpp"

#include <numeric>

namespace fracfactor {

double graph_largest_eigenvalue(const Graph& g, GraphMatrix which,
                                const PowerIterationOptions& opts) {
  double best = 0;
  bool first = true;
  for (const VertexSet& part : components(g)) {
    const Graph sub = g.induced(part);
    const DenseMatrix<double> m = which == GraphMatrix::Adjacency ? adjacency<double>(sub)
                                                                  : signless_laplacian<double>(sub);
    const double value = largest_eigenvalue(m, opts).value;
    if (first || value > best) best = value;
    first = false;
  }
  return best;
}

double hong_bound(const Graph& g) {
  if (!is_connected(g)) throw GraphError("hong_bound requires a connected graph");
  const double m = static_cast<double>(g.size());
  return std::sqrt(2 * m - g.order() + 1);
}

double feng_yu_bound(const Graph& g) {
  if (!is_connected(g)) throw GraphError("feng_yu_bound requires a connected graph");
  if (g.order() < 2) throw GraphError("feng_yu_bound requires n >= 2");
  const double m = static_cast<double>(g.size());
  const double n = g.order();
  return 2 * m / (n - 1) + n - 2;
}

void check_partition(int order, const Partition& partition) {
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  int covered = 0;
  for (const VertexSet& block : partition) {
    if (block.empty()) throw GraphError("partition has an empty block");
    for (Vertex v : block) {
      if (v >= order) throw GraphError("partition block member out of range");
      if (seen[v]) throw GraphError("partition blocks overlap");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != order) throw GraphError("partition does not cover the vertex set");
}

bool is_equitable(const Graph& g, const Partition& partition) {
  check_partition(g.order(), partition);
  std::vector<int> block_of(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (Vertex v : partition[i]) block_of[v] = static_cast<int>(i);
  const std::size_t k = partition.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> expected;
    for (Vertex v : partition[i]) {
      std::vector<int> counts(k, 0);
      for (Vertex w : g.neighbors(v)) ++counts[block_of[w]];
      if (expected.empty())
        expected = counts;
      else if (counts != expected)
        return false;
    }
  }
  return true;
}

DenseMatrix<double> L_adjacency_quotient(int n, int a) {
  DenseMatrix<double> b(3, 3);
  b << 1, 4 * a + 1, 0,
       2, 4 * a, n - 4 * a - 3,
       0, 4 * a + 1, n - 4 * a - 4;
  return b;
}

DenseMatrix<double> L_signless_quotient(int n, int a) {
  // Degrees: K_2 part 4a+2, K_{4a+1} part n-1, K_{n-4a-3} part n-3.
  DenseMatrix<double> b(3, 3);
  b << 4 * a + 3, 4 * a + 1, 0,
       2, n - 1 + 4 * a, n - 4 * a - 3,
       0, 4 * a + 1, 2 * n - 4 * a - 7;
  return b;
}

CharpolyMargins L_charpoly_margins(int n, int a) {
  const double nn = n;
  const double aa = a;
  return {nn * nn - 4 * nn - 32 * aa * aa - 24 * aa - 1,
          -2 * (4 * aa + 1) * (4 * aa + 1)};
}

int rho_order_threshold(int a) {
  const long disc = 32L * a * a + 24L * a + 5;
  long k = static_cast<long>(std::sqrt(static_cast<double>(disc)));
  while (k * k > disc) --k;
  while (k * k < disc) ++k;
  return static_cast<int>(2 + k);
}

namespace {

BoundCheck check_bound(const DenseMatrix<double>& full, const Partition& partition,
                       double bound, bool in_hypothesis, double tol) {
  BoundCheck out;
  PowerIterationOptions opts;
  opts.tol = std::min(tol, 1e-10);
  out.full = largest_eigenvalue(full, opts).value;
  out.quotient = quotient_eigenvalues(quotient_matrix(full, partition))(0);
  out.bound = bound;
  out.margin = bound - out.full;
  out.quotient_agrees = std::abs(out.full - out.quotient) <= tol;
  if (!in_hypothesis)
    out.status = LemmaStatus::OutOfHypothesis;
  else
    out.status = out.full <= bound + tol ? LemmaStatus::Holds : LemmaStatus::Fails;
  return out;
}

}  // namespace

LBoundsResult verify_L_bounds(int n, int a, double tol) {
  const LGraph l = construct_L(n, a);
  LBoundsResult out;
  out.partition_equitable = is_equitable(l.graph, l.parts);
  out.rho = check_bound(adjacency<double>(l.graph), l.parts, n - 2.0,
                        n >= rho_order_threshold(a), tol);
  out.q = check_bound(signless_laplacian<double>(l.graph), l.parts, 2.0 * n - 4.0,
                      n >= q_order_threshold(a), tol);
  out.trace = quotient_matrix(adjacency<double>(l.graph), l.parts).entries.trace();
  return out;
}

}  // namespace fracfactor
