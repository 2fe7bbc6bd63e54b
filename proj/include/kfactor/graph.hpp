#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace kfactor {

using Vertex = int;

/// One entry of an edge list handed to Multigraph::from_edge_list.
struct EdgeSpec {
  Vertex u;
  Vertex v;
  int multiplicity = 1;
};

/// A normalized edge: u <= v, multiplicity >= 1. u == v is a loop.
struct Edge {
  Vertex u;
  Vertex v;
  int multiplicity;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet range(Vertex first, Vertex last); // [first, last)

  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const std::vector<Vertex> &members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  VertexSet without(Vertex v) const;
  VertexSet united(const VertexSet &other) const;
  bool intersects(const VertexSet &other) const;

  /// Membership mask of length n; throws GraphError if a member is >= n.
  std::vector<bool> mask(int n) const;

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  std::vector<Vertex> members_;
};

/// An undirected multigraph with loops on vertices 0..n-1.
///
/// Edges are stored as normalized unordered pairs with an integer
/// multiplicity, sorted lexicographically. A loop contributes 2 to the
/// degree of its vertex. Values are immutable once constructed.
class Multigraph {
public:
  struct Incidence {
    Vertex other;
    int multiplicity;
    std::size_t edge; // index into edges()
  };

  Multigraph() = default;
  explicit Multigraph(int n) : Multigraph(from_edge_list(n, {})) {}

  /// Duplicate pairs are summed; (u,v) and (v,u) are the same pair.
  /// Throws GraphError on an out-of-range index or a multiplicity < 1.
  static Multigraph from_edge_list(int n, std::span<const EdgeSpec> edges);
  static Multigraph from_edge_list(int n, std::initializer_list<EdgeSpec> edges) {
    return from_edge_list(n, std::span<const EdgeSpec>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  const std::vector<Edge> &edges() const noexcept { return edges_; }

  /// Sum of all multiplicities, loops counted once.
  std::int64_t total_multiplicity() const noexcept { return total_; }

  int degree(Vertex v) const;
  const std::vector<int> &degrees() const noexcept { return degrees_; }
  bool is_regular(int d) const;
  bool has_loops() const noexcept { return loops_ > 0; }

  /// Multiplicity of the pair {u, v}; 0 when absent.
  int multiplicity(Vertex u, Vertex v) const;

  /// Incident edges of v, loops included once, ordered by neighbour.
  const std::vector<Incidence> &incident(Vertex v) const;

  /// FNV-1a over the canonical edge list; equal graphs hash equal.
  std::uint64_t fingerprint() const noexcept;

  friend bool operator==(const Multigraph &a, const Multigraph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<Incidence>> incident_;
  std::int64_t total_ = 0;
  std::int64_t loops_ = 0;
};

/// Total multiplicity of edges with one end in a and the other in b.
///
/// Each edge unit is counted at most once, so with a == b an internal edge
/// counts 1 and a loop at a member counts 1. For any disjoint D, S this gives
///   sum_{x in S} deg_{G-D}(x) = e(S, V-D-S) + 2 e(S, S).
std::int64_t edges_between(const Multigraph &g, const VertexSet &a, const VertexSet &b);

/// Result of delete_vertices. Survivors keep their relative order.
struct VertexDeletion {
  Multigraph graph;
  std::vector<Vertex> old_to_new; // -1 for deleted vertices
  std::vector<Vertex> new_to_old;

  /// Maps a set from the original index space, dropping deleted members.
  VertexSet transport(const VertexSet &original) const;
};

VertexDeletion delete_vertices(const Multigraph &g, const VertexSet &removed);

/// Connected components; blocks are ordered by their smallest vertex.
struct ComponentPartition {
  std::vector<VertexSet> blocks;
  std::vector<int> block_of; // vertex -> block index

  std::size_t count() const noexcept { return blocks.size(); }
};

ComponentPartition components(const Multigraph &g);
int odd_component_count(const Multigraph &g);

/// Multigraph with named vertex parts, as emitted by the constructions.
struct LabeledGraph {
  Multigraph graph;
  std::map<std::string, VertexSet> labels;

  /// Throws GraphError if the label is missing.
  const VertexSet &label(const std::string &name) const;
};

} // namespace kfactor
