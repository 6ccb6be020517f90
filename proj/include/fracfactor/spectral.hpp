#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fracfactor/graph.hpp"

namespace fracfactor {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar = double>
DenseMatrix<Scalar> adjacency(const Graph& g) {
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(g.order(), g.order());
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = Scalar(1);
  return a;
}

/// Q(G) = D(G) + A(G).
template <typename Scalar = double>
DenseMatrix<Scalar> signless_laplacian(const Graph& g) {
  DenseMatrix<Scalar> q = adjacency<Scalar>(g);
  for (Vertex v = 0; v < g.order(); ++v) q(v, v) = Scalar(g.degree(v));
  return q;
}

struct PowerIterationOptions {
  double tol = 1e-10;
  long max_iterations = 1'000'000;
};

template <typename Scalar = double>
struct SpectralResult {
  Scalar value{};
  Scalar residual{};  // ||M x - value x||_inf, ||x||_2 = 1
  long iterations = 0;
  DenseVector<Scalar> vector;
};

/// Largest eigenvalue of a symmetric matrix by shifted power iteration.
///
/// Iterates on M + cI with c = 1 for entrywise nonnegative input (which
/// separates the Perron value from -rho on bipartite graphs) and
/// c = ||M||_inf otherwise (which makes the shifted matrix positive
/// semidefinite). Nonnegative input starts from the all-ones vector, which
/// has a positive component along a Perron vector. Other input starts from
/// a fixed generic vector, since all-ones may be an eigenvector of a
/// smaller eigenvalue there.
/// Stops once ||M x - lambda x||_inf <= tol * max(1, ||M||_inf) with lambda
/// the Rayleigh quotient; throws ConvergenceError at the iteration cap.
template <typename Derived>
SpectralResult<typename Derived::Scalar> largest_eigenvalue(
    const Eigen::MatrixBase<Derived>& m, const PowerIterationOptions& opts = {}) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (n == 0 || m.cols() != n) throw std::invalid_argument("largest_eigenvalue: square input required");
  if (!(opts.tol > 0)) throw std::invalid_argument("largest_eigenvalue: tol must be positive");
  if (!m.allFinite()) throw std::invalid_argument("largest_eigenvalue: non-finite entry");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > Scalar(0))
    throw std::invalid_argument("largest_eigenvalue: matrix is not symmetric");

  const Scalar norm_inf = m.cwiseAbs().rowwise().sum().maxCoeff();
  const bool nonnegative = (m.array() >= Scalar(0)).all();
  const Scalar shift = nonnegative ? Scalar(1) : norm_inf;
  const Scalar threshold = Scalar(opts.tol) * std::max(Scalar(1), norm_inf);

  SpectralResult<Scalar> out;
  DenseVector<Scalar> x = DenseVector<Scalar>::Ones(n);
  if (!nonnegative)
    for (Eigen::Index i = 0; i < n; ++i) x(i) += Scalar(std::sin(static_cast<double>(i + 1)) / 2);
  x.normalize();
  DenseVector<Scalar> mx(n);
  for (long it = 1; it <= opts.max_iterations; ++it) {
    mx.noalias() = m * x;
    const Scalar lambda = x.dot(mx);
    const Scalar residual = (mx - lambda * x).cwiseAbs().maxCoeff();
    if (residual <= threshold) {
      out.value = lambda;
      out.residual = residual;
      out.iterations = it;
      out.vector = x;
      return out;
    }
    x = (mx + shift * x).normalized();
  }
  throw ConvergenceError("power iteration hit the iteration cap");
}

/// All eigenvalues of a symmetric matrix, descending.
template <typename Derived>
DenseVector<typename Derived::Scalar> symmetric_spectrum(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(m, Eigen::EigenvaluesOnly);
  DenseVector<Scalar> ev = solver.eigenvalues();
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<Scalar>());
  return ev;
}

/// Largest eigenvalue over the connected components of g (the matrix of a
/// disconnected graph is block diagonal in the component order).
enum class GraphMatrix { Adjacency, SignlessLaplacian };

double graph_largest_eigenvalue(const Graph& g, GraphMatrix which,
                                const PowerIterationOptions& opts = {});
inline double spectral_radius(const Graph& g, const PowerIterationOptions& opts = {}) {
  return graph_largest_eigenvalue(g, GraphMatrix::Adjacency, opts);
}
inline double signless_spectral_radius(const Graph& g, const PowerIterationOptions& opts = {}) {
  return graph_largest_eigenvalue(g, GraphMatrix::SignlessLaplacian, opts);
}

/// sqrt(2m - n + 1); connected input only.
double hong_bound(const Graph& g);
/// 2m/(n-1) + n - 2; connected input only.
double feng_yu_bound(const Graph& g);

using Partition = std::vector<VertexSet>;

void check_partition(int order, const Partition& partition);

/// Every vertex of block i has the same number of neighbours in block j.
bool is_equitable(const Graph& g, const Partition& partition);

template <typename Scalar>
struct QuotientMatrix {
  DenseMatrix<Scalar> entries;
  Partition partition;
  bool equitable = false;  // block row sums constant in every block
};

/// b_ij = (1/|X_i|) * sum of the entries of block M_ij.
template <typename Derived>
QuotientMatrix<typename Derived::Scalar> quotient_matrix(const Eigen::MatrixBase<Derived>& m,
                                                         const Partition& partition) {
  using Scalar = typename Derived::Scalar;
  check_partition(static_cast<int>(m.rows()), partition);
  const auto k = static_cast<Eigen::Index>(partition.size());
  QuotientMatrix<Scalar> q{DenseMatrix<Scalar>::Zero(k, k), partition, true};
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      Scalar total(0);
      Scalar first(0);
      bool have_first = false;
      for (Vertex r : partition[i]) {
        Scalar row(0);
        for (Vertex c : partition[j]) row += m(r, c);
        total += row;
        if (!have_first) {
          first = row;
          have_first = true;
        } else if (row != first) {
          q.equitable = false;
        }
      }
      q.entries(i, j) = total / Scalar(partition[i].size());
    }
  }
  return q;
}

/// Eigenvalues of a quotient matrix (real parts), descending. A quotient of
/// a symmetric matrix over an equitable partition has a real spectrum.
template <typename Scalar>
DenseVector<Scalar> quotient_eigenvalues(const QuotientMatrix<Scalar>& q) {
  Eigen::EigenSolver<DenseMatrix<Scalar>> solver(q.entries, false);
  DenseVector<Scalar> ev = solver.eigenvalues().real();
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<Scalar>());
  return ev;
}

/// det(x I - B). Orders up to 3 go through Eigen's cofactor expansion,
/// which is exact for small integer entries.
template <typename Derived>
typename Derived::Scalar charpoly_at(const Eigen::MatrixBase<Derived>& b, typename Derived::Scalar x) {
  using Scalar = typename Derived::Scalar;
  const auto k = b.rows();
  DenseMatrix<Scalar> shifted = x * DenseMatrix<Scalar>::Identity(k, k) - b;
  if (k == 3) return Eigen::Matrix<Scalar, 3, 3>(shifted).determinant();
  if (k == 2) return Eigen::Matrix<Scalar, 2, 2>(shifted).determinant();
  return shifted.determinant();
}

/// Quotient of A(L_{n,a}) over (K_2, K_{4a+1}, K_{n-4a-3}) in closed form.
DenseMatrix<double> L_adjacency_quotient(int n, int a);
/// Quotient of Q(L_{n,a}) over the same partition.
DenseMatrix<double> L_signless_quotient(int n, int a);

struct CharpolyMargins {
  double f_at_n_minus_2 = 0;  // n^2 - 4n - 32a^2 - 24a - 1
  double f_at_n_minus_3 = 0;  // -2(4a+1)^2
};
CharpolyMargins L_charpoly_margins(int n, int a);

/// ceil(2 + sqrt(32a^2 + 24a + 5)), computed exactly in integers.
int rho_order_threshold(int a);
/// 6a + 5.
inline int q_order_threshold(int a) { return 6 * a + 5; }

enum class LemmaStatus { Holds, Fails, OutOfHypothesis };

struct BoundCheck {
  LemmaStatus status = LemmaStatus::OutOfHypothesis;
  double full = 0;      // lambda_1 of the full matrix (power iteration)
  double quotient = 0;  // lambda_1 of the quotient matrix
  double bound = 0;     // n-2 or 2n-4
  double margin = 0;    // bound - full
  bool quotient_agrees = false;
};

struct LBoundsResult {
  BoundCheck rho;
  BoundCheck q;
  double trace = 0;         // trace of the adjacency quotient
  bool partition_equitable = false;
  bool holds() const {
    return rho.status != LemmaStatus::Fails && q.status != LemmaStatus::Fails;
  }
};

/// Computes rho(L_{n,a}) and q(L_{n,a}) from the full matrices and from
/// their quotients; each half reports OutOfHypothesis below its order bound.
LBoundsResult verify_L_bounds(int n, int a, double tol);

}  // namespace fracfactor
