#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracfactor {

using Vertex = int;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted set of distinct vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  static VertexSet from_mask(std::uint64_t mask);
  static VertexSet range(Vertex first, Vertex last);  // [first, last)

  bool contains(Vertex v) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  /// Edges in lexicographic (u, v) order.
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<int> degrees() const;
  int min_degree() const;

  /// Position of e in edges(), or -1.
  int edge_index(Edge e) const;

  Graph with_edge(Edge e) const;
  Graph without_edges(std::span<const Edge> removed) const;
  /// Vertex v becomes perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph induced(const VertexSet& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Edge> edges_;
};

Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

/// K_{a-1} ∇ (K_1 ∪ K_{n-a}). Vertices 0..a-2 are the universal block,
/// vertex a-1 is the low-degree vertex, the rest form the K_{n-a} block.
Graph construct_H(int n, int a);
/// Index of the degree-(a-1) vertex in construct_H(n, a).
inline Vertex H_special_vertex(int a) { return a - 1; }

struct LGraph {
  Graph graph;
  // K_2 part, K_{4a+1} part, K_{n-4a-3} part.
  std::vector<VertexSet> parts;
};

/// K_{4a+1} ∇ (K_2 ∪ K_{n-4a-3}), with the three-part partition.
LGraph construct_L(int n, int a);

/// Structural recognition of H_{n,a} up to isomorphism, n = g.order().
bool is_H_graph(const Graph& g, int a);

// Subset queries. S and T must hold vertices of g.
int degree_in_complement(const Graph& g, const VertexSet& S, Vertex v);
long edges_within(const Graph& g, const VertexSet& S);
long edges_between(const Graph& g, const VertexSet& S, const VertexSet& T);
bool is_independent(const Graph& g, const VertexSet& S);
bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
VertexSet complement_of(const Graph& g, const VertexSet& S);
void check_subset(const Graph& g, const VertexSet& S);

}  // namespace fracfactor
