#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fracfactor/enumerate.hpp"
#include "fracfactor/graph6.hpp"
#include "fracfactor/spectral.hpp"

using namespace fracfactor;
using doctest::Approx;

TEST_CASE("matrices of K_2") {
  const Graph k2 = complete(2);
  Eigen::Matrix2d a;
  a << 0, 1, 1, 0;
  CHECK(adjacency<double>(k2) == DenseMatrix<double>(a));
  Eigen::Matrix2d q;
  q << 1, 1, 1, 1;
  CHECK(signless_laplacian<double>(k2) == DenseMatrix<double>(q));
  CHECK(adjacency<int>(k2)(0, 1) == 1);
}

TEST_CASE("signless Laplacian row sums are twice the degrees") {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(12, 0.4, rng);
    const auto q = signless_laplacian<double>(g);
    for (Vertex v = 0; v < g.order(); ++v) CHECK(q.row(v).sum() == 2.0 * g.degree(v));
  }
}

TEST_CASE("complete graphs") {
  for (int n = 2; n <= 30; ++n) {
    CHECK(spectral_radius(complete(n)) == Approx(n - 1).epsilon(1e-12));
    CHECK(spectral_radius(complete(n - 1)) == Approx(n - 2).epsilon(1e-12));
    CHECK(signless_spectral_radius(complete(n)) == Approx(2 * n - 2).epsilon(1e-12));
  }
  CHECK(spectral_radius(complete(1)) == 0.0);
}

TEST_CASE("Hong and Feng-Yu bounds on small graphs") {
  CHECK(hong_bound(complete(4)) == Approx(3));
  CHECK(spectral_radius(complete(4)) == Approx(3));
  CHECK(hong_bound(path(3)) == Approx(std::sqrt(2.0)));
  CHECK(spectral_radius(path(3)) == Approx(std::sqrt(2.0)));
  CHECK(hong_bound(star(5)) == Approx(std::sqrt(5.0)));
  CHECK(spectral_radius(star(5)) == Approx(std::sqrt(5.0)));

  CHECK(feng_yu_bound(complete(4)) == Approx(6));
  CHECK(feng_yu_bound(complete(2)) == Approx(2));
  CHECK(feng_yu_bound(cycle(4)) == Approx(8.0 / 3 + 2));
  CHECK(signless_spectral_radius(cycle(4)) == Approx(4));

  const Graph split = disjoint_union(complete(2), complete(3));
  CHECK_THROWS(hong_bound(split));
  CHECK_THROWS(feng_yu_bound(split));
  CHECK_THROWS(feng_yu_bound(complete(1)));
}

TEST_CASE("Petersen graph") {
  // 3-regular: rho = 3, q = 6.
  const Graph p = from_graph6("IheA@GUAo");  // networkx petersen_graph()
  CHECK(spectral_radius(p) == Approx(3));
  CHECK(signless_spectral_radius(p) == Approx(6));
}

TEST_CASE("disconnected graphs take the component maximum") {
  const Graph g = disjoint_union(complete(3), star(4));
  CHECK(spectral_radius(g) == Approx(2));
  CHECK(signless_spectral_radius(g) == Approx(5));
  CHECK(spectral_radius(empty_graph(4)) == 0.0);
}

TEST_CASE("power iteration contract") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected_graph(20, 0.2, rng);
    const auto a = adjacency<double>(g);
    PowerIterationOptions opts;
    opts.tol = 1e-11;
    const auto r = largest_eigenvalue(a, opts);
    CHECK(r.vector.norm() == Approx(1));
    CHECK((a * r.vector - r.value * r.vector).cwiseAbs().maxCoeff() <= 1e-11 * a.cwiseAbs().rowwise().sum().maxCoeff());
    CHECK(r.value == Approx(symmetric_spectrum(a)(0)).epsilon(1e-9));
    CHECK((r.vector.array() > 0).all());
  }
  DenseMatrix<double> asym(2, 2);
  asym << 0, 1, 0, 0;
  CHECK_THROWS_AS(largest_eigenvalue(asym), std::invalid_argument);
  PowerIterationOptions capped;
  capped.max_iterations = 1;
  capped.tol = 1e-15;
  CHECK_THROWS_AS(largest_eigenvalue(adjacency<double>(path(9)), capped), ConvergenceError);
}

TEST_CASE("bipartite graphs converge to the Perron value") {
  // Unshifted iteration oscillates between +rho and -rho here.
  CHECK(spectral_radius(path(10)) == Approx(2 * std::cos(M_PI / 11)).epsilon(1e-9));
  CHECK(spectral_radius(cycle(8)) == Approx(2).epsilon(1e-9));
  CHECK(spectral_radius(join(empty_graph(3), empty_graph(5))) == Approx(std::sqrt(15.0)).epsilon(1e-9));
}

TEST_CASE("matrices with negative entries") {
  DenseMatrix<double> m(2, 2);
  m << 1, -2, -2, 1;  // eigenvalues 3, -1
  CHECK(largest_eigenvalue(m).value == Approx(3));
  m << -5, 0, 0, 1;
  CHECK(largest_eigenvalue(m).value == Approx(1));

  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> entry(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    DenseMatrix<double> r(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j <= i; ++j) r(i, j) = r(j, i) = entry(rng);
    CHECK(largest_eigenvalue(r).value == Approx(symmetric_spectrum(r)(0)).epsilon(1e-8));
  }
}

TEST_CASE("property: spectral radius grows when an edge is added to a connected graph") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected_graph(12, 0.15, rng);
    if (g.size() == 66) continue;
    Edge missing;
    for (Vertex u = 0; u < 12; ++u)
      for (Vertex v = u + 1; v < 12; ++v)
        if (!g.adjacent(u, v)) missing = Edge(u, v);
    const Graph h = g.with_edge(missing);
    CHECK(spectral_radius(h) > spectral_radius(g) + 1e-9);
    CHECK(signless_spectral_radius(h) > signless_spectral_radius(g) + 1e-9);
  }
}

TEST_CASE("property: Hong and Feng-Yu bounds on random connected graphs") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 25)(rng);
    const Graph g = random_connected_graph(n, std::uniform_real_distribution<double>(0, 0.6)(rng), rng);
    CHECK(spectral_radius(g) <= hong_bound(g) + 1e-9);
    CHECK(signless_spectral_radius(g) <= feng_yu_bound(g) + 1e-9);
  }
}

TEST_CASE("equitable partitions") {
  const LGraph l = construct_L(20, 2);
  CHECK(is_equitable(l.graph, l.parts));
  Partition singles;
  for (Vertex v = 0; v < 7; ++v) singles.push_back(VertexSet{v});
  CHECK(is_equitable(cycle(7), singles));
  CHECK(is_equitable(path(3), Partition{VertexSet{0, 2}, VertexSet{1}}));
  CHECK_FALSE(is_equitable(path(3), Partition{VertexSet{0, 1}, VertexSet{2}}));
  CHECK_THROWS(check_partition(3, Partition{VertexSet{0, 1}, VertexSet{1, 2}}));
  CHECK_THROWS(check_partition(3, Partition{VertexSet{0, 1}}));
  CHECK_THROWS(check_partition(3, Partition{VertexSet{0, 1, 2}, VertexSet{}}));
}

TEST_CASE("L-graph quotients") {
  const LGraph l = construct_L(20, 2);
  const auto qa = quotient_matrix(adjacency<double>(l.graph), l.parts);
  CHECK(qa.equitable);
  DenseMatrix<double> expected(3, 3);
  expected << 1, 9, 0, 2, 8, 9, 0, 9, 8;
  CHECK(qa.entries == expected);
  CHECK(L_adjacency_quotient(20, 2) == expected);
  CHECK(qa.entries.trace() == 17);

  // Row sums of a quotient equal the common degree in each block.
  const auto qq = quotient_matrix(signless_laplacian<double>(l.graph), l.parts);
  CHECK(qq.entries == L_signless_quotient(20, 2));
  CHECK(qq.entries.row(0).sum() == 2 * 10);
  CHECK(qq.entries.row(1).sum() == 2 * 19);
  CHECK(qq.entries.row(2).sum() == 2 * 17);

  const auto full = symmetric_spectrum(adjacency<double>(l.graph));
  const auto part = quotient_eigenvalues(qa);
  for (Eigen::Index i = 0; i < part.size(); ++i)
    CHECK((full.array() - part(i)).abs().minCoeff() < 1e-9);
  CHECK(part(0) == Approx(full(0)).epsilon(1e-12));
}

TEST_CASE("characteristic polynomial of the L quotient") {
  const auto m = L_charpoly_margins(20, 2);
  CHECK(m.f_at_n_minus_2 == 143);
  CHECK(m.f_at_n_minus_3 == -162);
  for (int a = 1; a <= 6; ++a) {
    for (int n = 4 * a + 4; n <= 200; ++n) {
      const auto b = L_adjacency_quotient(n, a);
      const auto closed = L_charpoly_margins(n, a);
      // Independent route: expand det(xI - B) by hand along the first row.
      auto det = [&](double x) {
        const double m00 = x - b(0, 0), m01 = -b(0, 1), m10 = -b(1, 0), m11 = x - b(1, 1),
                     m12 = -b(1, 2), m21 = -b(2, 1), m22 = x - b(2, 2);
        return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22);
      };
      CHECK(det(n - 2) == closed.f_at_n_minus_2);
      CHECK(det(n - 3) == closed.f_at_n_minus_3);
      CHECK(charpoly_at(b, double(n - 2)) == closed.f_at_n_minus_2);
      CHECK(charpoly_at(b, double(n - 3)) == closed.f_at_n_minus_3);
      CHECK(b.trace() == n - 3);
    }
  }
}

TEST_CASE("order thresholds") {
  for (int a = 1; a <= 50; ++a) {
    const int t = rho_order_threshold(a);
    const long disc = 32L * a * a + 24L * a + 5;
    // t - 2 is the least k with k^2 >= disc.
    CHECK((t - 2L) * (t - 2L) >= disc);
    CHECK((t - 3L) * (t - 3L) < disc);
    CHECK(q_order_threshold(a) == 6 * a + 5);
  }
  CHECK(rho_order_threshold(2) == 16);  // ceil(sqrt(181)) = 14
}

TEST_CASE("L-graph bounds") {
  for (int a = 1; a <= 3; ++a) {
    for (int n = 4 * a + 4; n <= 60; ++n) {
      const auto r = verify_L_bounds(n, a, 1e-9);
      CHECK(r.holds());
      CHECK(r.partition_equitable);
      CHECK(r.rho.quotient_agrees);
      CHECK(r.q.quotient_agrees);
      CHECK(r.trace == n - 3);
      CHECK((r.rho.status == LemmaStatus::OutOfHypothesis) == (n < rho_order_threshold(a)));
      CHECK((r.q.status == LemmaStatus::OutOfHypothesis) == (n < q_order_threshold(a)));
    }
  }
}
