#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fracfactor/certificate_json.hpp"
#include "fracfactor/enumerate.hpp"
#include "fracfactor/factor.hpp"

using namespace fracfactor;
using nlohmann::json;

namespace {

DegreeBounds uniform(const Graph& g, int a, int b) { return DegreeBounds::uniform(g.order(), {a, b}); }

// Definition-level recount of delta for S given as a bitmask.
long delta_by_definition(const Graph& g, unsigned mask, int a, int b) {
  long s = 0, t = 0, sum = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (mask >> x & 1u) {
      ++s;
      continue;
    }
    int d = 0;
    for (Vertex y = 0; y < g.order(); ++y)
      if (!(mask >> y & 1u) && g.adjacent(x, y)) ++d;
    if (d <= a) {
      ++t;
      sum += d;
    }
  }
  return b * s - a * t + sum;
}

IndicatorAssignment assignment_for(const Graph& g, std::initializer_list<std::pair<Edge, Rational>> w) {
  IndicatorAssignment h{g.edges(), std::vector<Rational>(g.size(), 0)};
  for (const auto& [e, v] : w) h.weights[static_cast<std::size_t>(g.edge_index(e))] = v;
  return h;
}

}  // namespace

TEST_CASE("bounds validation") {
  CHECK_THROWS(FactorBounds(0, 1));
  CHECK_THROWS(FactorBounds(3, 2));
  CHECK_THROWS(DegreeBounds({1, 2}, {1}));
  CHECK_THROWS(DegreeBounds({2}, {1}));
  CHECK_THROWS(DegreeBounds({-1}, {1}));
}

TEST_CASE("low-degree set, epsilon and deficiency") {
  const Graph h = construct_H(6, 2);  // 0 universal, 1 pendant, 2..5 a K_4
  CHECK(low_degree_set(h, {}, 2) == VertexSet{1});
  CHECK(low_degree_set(h, VertexSet{0}, 2) == VertexSet{1});
  CHECK(epsilon(h, {}, VertexSet{1}, 2) == 0);
  CHECK(epsilon(h, VertexSet{0, 2}, {}, 2) == 2);  // not independent
  // S = {2}: neighbours 3, 4, 5 keep degree 3 > a, so they sit outside S u T.
  CHECK(epsilon(h, VertexSet{2}, low_degree_set(h, VertexSet{2}, 2), 2) == 1);
  // S = {1}: its only neighbour 0 has degree 4 in G - S, outside T.
  CHECK(epsilon(h, VertexSet{1}, low_degree_set(h, VertexSet{1}, 2), 2) == 1);

  const DeficiencyWitness w = deficiency(h, {}, {2, 2});
  CHECK(w.T == VertexSet{1});
  CHECK(w.delta == -1);
  CHECK(w.epsilon == 0);
  CHECK(w.violates());

  const DeficiencyWitness c4 = deficiency(cycle(4), {}, {2, 2});
  CHECK(c4.T == VertexSet::range(0, 4));
  CHECK(c4.delta == 0);
  CHECK(c4.epsilon == 0);
  CHECK_FALSE(c4.violates());

  // Edge from S to a T-vertex of degree exactly a in G - S.
  const Graph p = path(3);
  CHECK(epsilon(p, VertexSet{0}, low_degree_set(p, VertexSet{0}, 1), 1) == 1);
  CHECK(epsilon(empty_graph(3), VertexSet{0, 1}, VertexSet{2}, 1) == 0);
}

TEST_CASE("property: deficiency matches the definition") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const Graph g = random_graph(n, 0.5, rng);
    const int a = std::uniform_int_distribution<int>(1, 3)(rng);
    const int b = a + std::uniform_int_distribution<int>(0, 2)(rng);
    const unsigned mask = std::uniform_int_distribution<unsigned>(0, (1u << n) - 1)(rng);
    CHECK(deficiency(g, VertexSet::from_mask(mask), {a, b}).delta == delta_by_definition(g, mask, a, b));
  }
}

TEST_CASE("H graphs are not covered") {
  for (int a = 2; a <= 4; ++a) {
    for (int n = a + 3; n <= 12; ++n) {
      const Graph h = construct_H(n, a);
      const Verdict v = is_covered_structural(h, {a, a});
      CHECK_FALSE(v.holds);
      REQUIRE(v.witness);
      CHECK(v.witness->S.empty());
      CHECK(v.witness->T == VertexSet{H_special_vertex(a)});
      CHECK(v.witness->delta == -1);
      CHECK(v.witness->epsilon == 0);
      CHECK(delta_by_definition(h, 0, a, a) == -1);
    }
  }
}

TEST_CASE("small covered graphs") {
  CHECK(is_covered_structural(complete(8), {2, 3}).holds);
  CHECK(is_covered_oracle(complete(8), {2, 3}).holds);
  CHECK(is_covered_structural(cycle(4), {2, 2}).holds);
  CHECK(is_covered_oracle(cycle(4), {2, 2}).holds);
  CHECK(is_covered_structural(complete(2), {1, 1}).holds);
  CHECK(is_covered_oracle(complete(2), {1, 1}).holds);
}

TEST_CASE("C_5 has a fractional perfect matching but is not 1-covered") {
  const Graph c5 = cycle(5);
  CHECK(has_factor_structural(c5, {1, 1}).holds);
  const Verdict f = has_factor_oracle(c5, {1, 1});
  REQUIRE(f.holds);
  for (const Rational& w : f.assignments[0].weights) CHECK(w == Rational(1, 2));

  const Verdict lp = is_covered_oracle(c5, {1, 1});
  CHECK_FALSE(lp.holds);
  REQUIRE(lp.infeasibility);
  CHECK(verify_infeasibility(c5, uniform(c5, 1, 1), *lp.infeasibility));
  const Verdict st = is_covered_structural(c5, {1, 1});
  CHECK_FALSE(st.holds);
  REQUIRE(st.witness);
  CHECK(st.witness->violates());
  CHECK_FALSE(is_covered_half_integral(c5, {1, 1}).holds);
}

TEST_CASE("forced edge in K_4") {
  const Graph k4 = complete(4);
  const DegreeBounds db = uniform(k4, 2, 2);
  // Perfect matching through the forced edge plus half of the 4-cycle on the rest.
  const auto h = assignment_for(k4, {{Edge(0, 1), 1}, {Edge(2, 3), 1}, {Edge(0, 2), Rational(1, 2)},
                                     {Edge(1, 2), Rational(1, 2)}, {Edge(1, 3), Rational(1, 2)},
                                     {Edge(0, 3), Rational(1, 2)}});
  CHECK(validate_indicator(k4, h, db));
  const auto lp = find_factor_lp(k4, db, Edge(0, 1));
  REQUIRE(lp);
  CHECK(validate_indicator(k4, *lp, db));
  CHECK(lp->weight(Edge(0, 1)) == 1);
  const auto half = half_integral_search(k4, db, Edge(0, 1));
  REQUIRE(half);
  CHECK(validate_indicator(k4, *half, db));
  CHECK(half->weight(Edge(0, 1)) == 1);
}

TEST_CASE("H_{6,2} fails on the pendant edge") {
  const Graph h = construct_H(6, 2);
  const Verdict v = is_covered_oracle(h, {2, 2});
  CHECK_FALSE(v.holds);
  REQUIRE(v.failing_edge);
  CHECK(*v.failing_edge == Edge(0, 1));
  REQUIRE(v.infeasibility);
  CHECK(verify_infeasibility(h, uniform(h, 2, 2), *v.infeasibility));
  const Verdict half = is_covered_half_integral(h, {2, 2});
  CHECK_FALSE(half.holds);
  CHECK(half.failing_edge == v.failing_edge);
  CHECK_FALSE(has_factor_oracle(h, {2, 2}).holds);
}

TEST_CASE("validate_indicator") {
  const Graph k2 = complete(2);
  const DegreeBounds db = uniform(k2, 1, 1);
  CHECK(validate_indicator(k2, assignment_for(k2, {{Edge(0, 1), 1}}), db));
  CHECK_FALSE(validate_indicator(k2, assignment_for(k2, {{Edge(0, 1), Rational(1, 2)}}), db));
  CHECK_FALSE(validate_indicator(k2, assignment_for(k2, {{Edge(0, 1), Rational(3, 2)}}), uniform(k2, 1, 2)));
  CHECK_FALSE(validate_indicator(k2, assignment_for(k2, {{Edge(0, 1), -1}}), db));
  IndicatorAssignment wrong{{}, {}};
  CHECK_THROWS(validate_indicator(k2, wrong, db));
}

TEST_CASE("forced reduction") {
  const Graph k3 = complete(3);
  const auto r = reduce_forced(k3, DegreeBounds({1, 2, 2}, {1, 2, 2}), Edge(0, 1));
  CHECK(r.graph.size() == 2);
  CHECK(r.bounds.lower == std::vector<int>{0, 1, 2});
  CHECK(r.bounds.upper == std::vector<int>{0, 1, 2});
  CHECK_THROWS(reduce_forced(k3, DegreeBounds({0, 0, 0}, {0, 1, 1}), Edge(0, 1)));
  CHECK_THROWS(reduce_forced(path(3), uniform(path(3), 1, 1), Edge(0, 2)));
  // Blocked forced edge: no solution, and the certificate still verifies.
  const DegreeBounds blocked({0, 0, 0}, {0, 1, 1});
  CHECK_FALSE(find_factor_lp(k3, blocked, Edge(0, 1)));
  const auto cert = infeasibility_certificate(k3, blocked, Edge(0, 1));
  CHECK(verify_infeasibility(k3, blocked, cert));
}

TEST_CASE("capability caps") {
  CHECK_THROWS_AS(is_covered_structural(complete(21), {2, 2}), CapabilityError);
  CHECK_NOTHROW(has_factor_structural(path(20), {1, 1}));
  CHECK_THROWS_AS(half_integral_search(path(15), uniform(path(15), 1, 1)), CapabilityError);
  CHECK_NOTHROW(half_integral_search(path(14), uniform(path(14), 1, 1)));
}

TEST_CASE("exhaustive checks over every graph up to order 6") {
  const FactorBounds pairs[] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}};
  StructuralOptions unpruned;
  unpruned.prune = false;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      for (const FactorBounds& fb : pairs) {
        const Verdict cov = is_covered_structural(g, fb);
        const Verdict fac = has_factor_structural(g, fb);
        const Verdict cov_raw = is_covered_structural(g, fb, unpruned);
        const Verdict fac_raw = has_factor_structural(g, fb, unpruned);
        CHECK(cov.holds == cov_raw.holds);
        CHECK(fac.holds == fac_raw.holds);
        if (!cov.holds) CHECK(cov.witness->S == cov_raw.witness->S);
        if (cov.holds && g.size() > 0) CHECK(fac.holds);
        CHECK(fac.holds == has_factor_oracle(g, fb).holds);
      }
    }
  }
}

TEST_CASE("property: adding an edge keeps a fractional factor") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(8, 0.3, rng);
    bool had = has_factor_structural(g, {1, 2}).holds;
    for (Vertex u = 0; u < 8; ++u) {
      for (Vertex v = u + 1; v < 8; ++v) {
        if (g.adjacent(u, v)) continue;
        g = g.with_edge(Edge(u, v));
        const bool now = has_factor_structural(g, {1, 2}).holds;
        if (had) CHECK(now);
        had = now;
      }
    }
    CHECK(had);  // K_8
  }
}

TEST_CASE("rational strings") {
  CHECK(rational_to_string(Rational(1)) == "1/1");
  CHECK(rational_to_string(Rational(-2, 4)) == "-1/2");
  CHECK(rational_from_string("3/6") == Rational(1, 2));
  CHECK(rational_from_string("-7") == -7);
  CHECK_THROWS(rational_from_string("1/0"));
  CHECK_THROWS(rational_from_string("0.5"));
  CHECK_THROWS(rational_from_string(""));
}

TEST_CASE("property: certificates survive a JSON round trip") {
  Rng rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const Graph g = random_graph(n, 0.6, rng);
    const FactorBounds fb(1, 2);
    const Verdict st = is_covered_structural(g, fb);
    if (st.witness) {
      const DeficiencyWitness back = json::parse(json(*st.witness).dump()).get<DeficiencyWitness>();
      CHECK(back.S == st.witness->S);
      CHECK(back.T == st.witness->T);
      CHECK(back.delta == st.witness->delta);
      CHECK(back.epsilon == st.witness->epsilon);
    }
    const Verdict lp = is_covered_oracle(g, fb);
    for (const auto& h : lp.assignments) {
      const auto back = json::parse(json(h).dump()).get<IndicatorAssignment>();
      CHECK(back.edges == h.edges);
      CHECK(back.weights == h.weights);
      CHECK(validate_indicator(g, back, DegreeBounds::uniform(n, fb)));
    }
    if (lp.infeasibility) {
      const auto back = json::parse(json(*lp.infeasibility).dump()).get<InfeasibilityCertificate>();
      CHECK(back.forced == lp.infeasibility->forced);
      CHECK(back.multipliers == lp.infeasibility->multipliers);
      CHECK(verify_infeasibility(g, DegreeBounds::uniform(n, fb), back));
    }
  }
}
