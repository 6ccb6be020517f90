#include "fracfactor/graph.hpp"

#include <algorithm>
#include <numeric>

namespace fracfactor {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() < 0)
    throw GraphError("vertex set holds a negative vertex");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw GraphError("vertex set holds a duplicate vertex");
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  std::vector<Vertex> out(static_cast<std::size_t>(std::max(0, last - first)));
  std::iota(out.begin(), out.end(), first);
  return VertexSet(std::move(out));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(int order, std::span<const Edge> edges)
    : n_(order),
      adj_(static_cast<std::size_t>(order > 0 ? order : 0) * (order > 0 ? order : 0), 0),
      nbrs_(static_cast<std::size_t>(order > 0 ? order : 0)) {
  if (order < 1) throw GraphError("graph order must be positive");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n_) throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("self-loop rejected");
    auto& cell = adj_[static_cast<std::size_t>(e.u) * n_ + e.v];
    if (cell) continue;
    cell = 1;
    adj_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
  }
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (!adjacent(u, v)) continue;
      nbrs_[u].push_back(v);
      if (u < v) edges_.emplace_back(u, v);
    }
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

int Graph::min_degree() const {
  int best = n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::with_edge(Edge e) const {
  std::vector<Edge> all = edges_;
  all.push_back(e);
  return Graph(n_, all);
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(),
                      std::back_inserter(kept));
  return Graph(n_, kept);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_))
    throw GraphError("permutation size does not match graph order");
  std::vector<char> seen(perm.size(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw GraphError("not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) mapped.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n_, mapped);
}

Graph Graph::induced(const VertexSet& keep) const {
  check_subset(*this, keep);
  std::vector<Vertex> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> sub;
  for (const Edge& e : edges_)
    if (index[e.u] >= 0 && index[e.v] >= 0) sub.emplace_back(index[e.u], index[e.v]);
  return Graph(static_cast<int>(keep.size()), sub);
}

Graph empty_graph(int n) { return Graph(n, std::span<const Edge>{}); }

Graph complete(int n) {
  if (n < 1) throw GraphError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(g1.order() + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  for (Vertex u = 0; u < g1.order(); ++u)
    for (Vertex v = 0; v < g2.order(); ++v) edges.emplace_back(u, v + shift);
  return Graph(g1.order() + g2.order(), edges);
}

Graph construct_H(int n, int a) {
  if (a < 2 || a > n - 1)
    throw GraphError("construct_H requires 2 <= a <= n-1");
  return join(complete(a - 1), disjoint_union(complete(1), complete(n - a)));
}

LGraph construct_L(int n, int a) {
  if (a < 1 || n < 4 * a + 4)
    throw GraphError("construct_L requires a >= 1 and n >= 4a+4");
  const int big = 4 * a + 1;
  const int rest = n - 4 * a - 3;
  // Layout: K_2 block first, then K_{4a+1}, then K_{n-4a-3}.
  std::vector<Edge> edges;
  auto clique = [&](Vertex first, int count) {
    for (Vertex u = first; u < first + count; ++u)
      for (Vertex v = u + 1; v < first + count; ++v) edges.emplace_back(u, v);
  };
  clique(0, 2);
  clique(2, big);
  clique(2 + big, rest);
  for (Vertex u = 2; u < 2 + big; ++u) {
    for (Vertex v = 0; v < 2; ++v) edges.emplace_back(u, v);
    for (Vertex v = 2 + big; v < n; ++v) edges.emplace_back(u, v);
  }
  return LGraph{Graph(n, edges),
                {VertexSet::range(0, 2), VertexSet::range(2, 2 + big),
                 VertexSet::range(2 + big, n)}};
}

bool is_H_graph(const Graph& g, int a) {
  const int n = g.order();
  if (a < 2 || a > n - 1) return false;
  std::vector<Vertex> rest;
  int universal = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1)
      ++universal;
    else
      rest.push_back(v);
  }
  if (universal != a - 1) return false;
  // The non-universal vertices must induce K_1 ∪ K_{n-a}.
  for (Vertex x : rest) {
    if (g.degree(x) != a - 1) continue;
    std::vector<Vertex> others;
    for (Vertex y : rest)
      if (y != x) others.push_back(y);
    bool ok = true;
    for (std::size_t i = 0; ok && i < others.size(); ++i)
      for (std::size_t j = i + 1; ok && j < others.size(); ++j)
        ok = g.adjacent(others[i], others[j]);
    if (ok) return true;
  }
  return false;
}

void check_subset(const Graph& g, const VertexSet& S) {
  if (!S.empty() && S.members().back() >= g.order())
    throw GraphError("vertex set member out of range");
}

int degree_in_complement(const Graph& g, const VertexSet& S, Vertex v) {
  int d = 0;
  for (Vertex w : g.neighbors(v))
    if (!S.contains(w)) ++d;
  return d;
}

long edges_within(const Graph& g, const VertexSet& S) {
  check_subset(g, S);
  long count = 0;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j)
      if (g.adjacent(S[i], S[j])) ++count;
  return count;
}

long edges_between(const Graph& g, const VertexSet& S, const VertexSet& T) {
  check_subset(g, S);
  check_subset(g, T);
  for (Vertex v : S)
    if (T.contains(v)) throw GraphError("edges_between needs disjoint sets");
  long count = 0;
  for (Vertex u : S)
    for (Vertex v : T)
      if (g.adjacent(u, v)) ++count;
  return count;
}

bool is_independent(const Graph& g, const VertexSet& S) {
  return edges_within(g, S) == 0;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (label[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members{root}, stack{root};
    label[root] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] >= 0) continue;
        label[w] = id;
        members.push_back(w);
        stack.push_back(w);
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

VertexSet complement_of(const Graph& g, const VertexSet& S) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!S.contains(v)) out.push_back(v);
  return VertexSet(std::move(out));
}

}  // namespace fracfactor
