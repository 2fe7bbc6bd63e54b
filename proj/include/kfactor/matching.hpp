#pragma once

#include "kfactor/graph.hpp"

#include <utility>
#include <vector>

namespace kfactor {

/// Set of vertex-disjoint edges, each stored as (smaller, larger), sorted.
struct Matching {
  std::vector<std::pair<Vertex, Vertex>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }

  /// mate[v] or -1, for a graph of order n.
  std::vector<Vertex> mates(int n) const;
};

/// Maximum-cardinality matching by Edmonds' blossom algorithm, O(V^3).
///
/// Parallel edges collapse to a single candidate. A greedy pass in
/// ascending vertex order seeds the matching; augmentation then scans free
/// vertices in ascending order. Throws GraphError if g has a loop.
Matching max_matching(const Multigraph &g);

/// Exhaustive maximum matching over vertex subsets, memoized on bitmasks.
/// Throws GuardError for n > 12 and GraphError if g has a loop.
Matching brute_force_max_matching(const Multigraph &g);

/// True iff m covers every vertex. Throws GraphError if m is not a
/// matching of g.
bool is_perfect(const Multigraph &g, const Matching &m);

/// Throws GraphError unless m is a loop-free matching using edges of g.
void check_matching(const Multigraph &g, const Matching &m);

} // namespace kfactor
