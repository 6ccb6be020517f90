#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fracfactor/graph.hpp"

namespace fracfactor {

using Rng = std::mt19937_64;

/// Canonical labelling by exhaustive permutation search (small n only):
/// the relabelled copy whose graph6 string is lexicographically largest.
Graph canonical_form(const Graph& g);

/// All graphs of order n up to isomorphism, in canonical form, 1 <= n <= 7.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

/// K_n minus `removed_edges` edges drawn uniformly without replacement.
Graph sample_dense_graph(int n, int removed_edges, Rng& rng);

/// Random recursive spanning tree over a shuffled vertex order, plus each
/// pair independently with probability p. Always connected.
Graph random_connected_graph(int n, double p, Rng& rng);

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, Rng& rng);

}  // namespace fracfactor
