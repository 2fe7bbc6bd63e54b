#include "kfactor/factor.hpp"

#include "kfactor/error.hpp"
#include "kfactor/matching.hpp"

#include <string>

namespace kfactor {

Multigraph Factor::as_graph(const Multigraph &host) const {
  std::vector<EdgeSpec> kept;
  for (std::size_t i = 0; i < chosen.size() && i < host.edges().size(); ++i)
    if (chosen[i] > 0)
      kept.push_back({host.edges()[i].u, host.edges()[i].v, chosen[i]});
  return Multigraph::from_edge_list(host.order(), kept);
}

GadgetGraph gadget_transform(const Multigraph &g, int k) {
  if (k < 1)
    throw GraphError("factor degree must be at least 1, got " + std::to_string(k));
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < k)
      throw DegreeDeficientError(v, g.degree(v), k);

  GadgetGraph out;
  std::vector<std::vector<Vertex>> externals_of(static_cast<std::size_t>(g.order()));
  std::vector<EdgeSpec> derived_edges;

  const auto add_external = [&](Vertex host, std::size_t edge) {
    const auto id = static_cast<Vertex>(out.external.size());
    out.external.push_back({host, edge});
    externals_of[host].push_back(id);
    return id;
  };

  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge &e = g.edges()[i];
    for (int unit = 0; unit < e.multiplicity; ++unit) {
      const Vertex a = add_external(e.u, i);
      const Vertex b = add_external(e.v, i);
      derived_edges.push_back({a, b, 1});
    }
  }

  const auto first_internal = static_cast<Vertex>(out.external.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int j = 0; j < g.degree(v) - k; ++j) {
      const auto id = first_internal + static_cast<Vertex>(out.internal_host.size());
      out.internal_host.push_back(v);
      for (Vertex ext : externals_of[v])
        derived_edges.push_back({id, ext, 1});
    }
  }

  const auto total = static_cast<int>(out.external.size() + out.internal_host.size());
  out.derived = Multigraph::from_edge_list(total, derived_edges);
  return out;
}

std::optional<Factor> find_k_factor(const Multigraph &g, int k) {
  if (k < 1)
    throw GraphError("factor degree must be at least 1, got " + std::to_string(k));
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < k)
      return std::nullopt;

  const GadgetGraph gadget = gadget_transform(g, k);
  const Matching m = max_matching(gadget.derived);
  if (2 * m.size() != static_cast<std::size_t>(gadget.derived.order()))
    return std::nullopt;

  Factor f{g.fingerprint(), k, std::vector<int>(g.edges().size(), 0)};
  const auto externals = gadget.external_count();
  for (const auto &[a, b] : m.pairs) {
    // Both ends external means the edge unit joining them is used.
    if (static_cast<std::size_t>(b) < externals)
      ++f.chosen[gadget.external[a].edge];
  }
  return f;
}

bool verify_factor(const Multigraph &g, int k, const Factor &f) {
  if (f.host_fingerprint != g.fingerprint() || f.chosen.size() != g.edges().size())
    throw GraphError("factor was built for a different host graph");
  if (f.k != k)
    return false;
  std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < f.chosen.size(); ++i) {
    const Edge &e = g.edges()[i];
    if (f.chosen[i] < 0 || f.chosen[i] > e.multiplicity)
      return false;
    degree[e.u] += f.chosen[i];
    degree[e.v] += f.chosen[i];
  }
  for (int d : degree)
    if (d != k)
      return false;
  return true;
}

std::optional<Factor> factor_from_subgraph(const Multigraph &g, int k, const Multigraph &sub) {
  if (sub.order() != g.order())
    return std::nullopt;
  Factor f{g.fingerprint(), k, std::vector<int>(g.edges().size(), 0)};
  std::size_t i = 0;
  for (const Edge &e : sub.edges()) {
    while (i < g.edges().size() &&
           std::pair(g.edges()[i].u, g.edges()[i].v) < std::pair(e.u, e.v))
      ++i;
    if (i == g.edges().size() || g.edges()[i].u != e.u || g.edges()[i].v != e.v)
      return std::nullopt;
    f.chosen[i] = e.multiplicity;
  }
  return f;
}

} // namespace kfactor
