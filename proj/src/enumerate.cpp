#include "fracfactor/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fracfactor/graph6.hpp"

namespace fracfactor {

namespace {

// Upper-triangle bits in graph6 order after placing perm[p] at position p.
std::uint64_t triangle_code(const Graph& g, const std::vector<Vertex>& perm) {
  std::uint64_t code = 0;
  const int n = g.order();
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
  return code;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 9) throw std::invalid_argument("canonical_form supports n <= 9");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = 0;
  std::vector<Vertex> best_perm = perm;
  bool first = true;
  do {
    const std::uint64_t code = triangle_code(g, perm);
    if (first || code > best) {
      best = code;
      best_perm = perm;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  // best_perm[p] = original vertex at new position p; invert for relabel.
  std::vector<Vertex> to_new(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) to_new[best_perm[p]] = p;
  return g.relabeled(to_new);
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_graphs supports 1 <= n <= 7");
  std::vector<Graph> level{complete(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& base : level) {
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<Edge> edges = base.edges();
        for (Vertex v = 0; v < k - 1; ++v)
          if (mask & (1u << v)) edges.emplace_back(v, k - 1);
        Graph canon = canonical_form(Graph(k, edges));
        if (seen.insert(to_graph6(canon)).second) next.push_back(std::move(canon));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (Graph& g : level)
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), [](const Graph& x, const Graph& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return to_graph6(x) < to_graph6(y);
  });
  return out;
}

Graph sample_dense_graph(int n, int removed_edges, Rng& rng) {
  const Graph k = complete(n);
  if (removed_edges < 0 || static_cast<std::size_t>(removed_edges) > k.size())
    throw std::invalid_argument("sample_dense_graph: removed_edges outside [0, C(n,2)]");
  std::vector<Edge> drop;
  drop.reserve(static_cast<std::size_t>(removed_edges));
  std::sample(k.edges().begin(), k.edges().end(), std::back_inserter(drop), removed_edges, rng);
  return k.without_edges(drop);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace fracfactor
