#pragma once

#include "kfactor/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kfactor {

/// A spanning sub-multigraph of a host graph, chosen edge unit by edge unit.
///
/// chosen[i] counts how many units of host.edges()[i] are used. The host is
/// identified by its fingerprint so a factor cannot silently be checked
/// against a different graph.
struct Factor {
  std::uint64_t host_fingerprint = 0;
  int k = 0;
  std::vector<int> chosen;

  /// The chosen edges as a graph on the host's vertex set.
  Multigraph as_graph(const Multigraph &host) const;
};

/// Derived loopless graph whose perfect matchings are the k-factors of a
/// host multigraph.
///
/// Every host vertex v of degree d gets d external vertices, one per edge
/// end at v, and d - k internal vertices joined to all of v's externals.
/// Each edge unit joins the externals at its two ends (a loop joins two
/// externals of the same vertex). Externals are numbered first, in edge
/// order; internals follow, grouped by host vertex.
struct GadgetGraph {
  struct ExternalSlot {
    Vertex host;
    std::size_t edge; // index into host.edges()
  };

  Multigraph derived;
  std::vector<ExternalSlot> external; // derived vertex -> slot, for ids < external.size()
  std::vector<Vertex> internal_host;  // derived vertex - external.size() -> host vertex

  std::size_t external_count() const noexcept { return external.size(); }
  std::size_t internal_count() const noexcept { return internal_host.size(); }
};

/// Throws DegreeDeficientError naming the first vertex with degree < k,
/// and GraphError for k < 1.
GadgetGraph gadget_transform(const Multigraph &g, int k);

/// A k-factor of g, or nullopt if none exists. A vertex of degree below k
/// rules a factor out and yields nullopt without building the gadget.
/// Any returned factor passes verify_factor.
std::optional<Factor> find_k_factor(const Multigraph &g, int k);

/// True iff f is a k-factor of g: every degree equals k and no edge is used
/// beyond its multiplicity. Throws GraphError if f was built for another host.
bool verify_factor(const Multigraph &g, int k, const Factor &f);

/// Wraps a sub-multigraph of g as a Factor. Returns nullopt if sub uses a
/// pair that g does not have or has a different order.
std::optional<Factor> factor_from_subgraph(const Multigraph &g, int k, const Multigraph &sub);

} // namespace kfactor
