#include "kfactor/connectivity.hpp"

#include "kfactor/error.hpp"

#include <limits>
#include <vector>

namespace kfactor {
namespace {

CutResult normalized(int n, std::vector<Vertex> shore, std::int64_t value) {
  VertexSet side(std::move(shore));
  const bool take_complement =
      2 * side.size() > static_cast<std::size_t>(n) ||
      (2 * side.size() == static_cast<std::size_t>(n) && !side.contains(0));
  if (take_complement) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (!side.contains(v))
        rest.push_back(v);
    side = VertexSet(std::move(rest));
  }
  return {value, std::move(side)};
}

} // namespace

CutResult global_min_cut(const Multigraph &g) {
  const int n = g.order();
  if (n < 2)
    throw GraphError("minimum cut needs at least 2 vertices");

  const auto parts = components(g);
  if (parts.count() > 1)
    return normalized(n, parts.blocks.front().members(), 0);

  // Dense weight matrix; merged vertices accumulate their members.
  std::vector<std::vector<std::int64_t>> weight(n, std::vector<std::int64_t>(n, 0));
  for (const Edge &e : g.edges()) {
    if (e.is_loop())
      continue;
    weight[e.u][e.v] += e.multiplicity;
    weight[e.v][e.u] += e.multiplicity;
  }
  std::vector<std::vector<Vertex>> members(n);
  for (Vertex v = 0; v < n; ++v)
    members[v] = {v};
  std::vector<bool> merged(n, false);

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Vertex> best_shore;

  for (int phase = n; phase > 1; --phase) {
    // Maximum adjacency ordering; ties go to the lowest index.
    std::vector<std::int64_t> attach(n, 0);
    std::vector<bool> added(n, false);
    Vertex prev = -1;
    Vertex last = -1;
    for (int step = 0; step < phase; ++step) {
      Vertex pick = -1;
      for (Vertex v = 0; v < n; ++v)
        if (!merged[v] && !added[v] && (pick < 0 || attach[v] > attach[pick]))
          pick = v;
      added[pick] = true;
      prev = last;
      last = pick;
      if (step + 1 < phase)
        for (Vertex v = 0; v < n; ++v)
          if (!merged[v] && !added[v])
            attach[v] += weight[pick][v];
    }

    if (attach[last] < best) {
      best = attach[last];
      best_shore = members[last];
    }

    // Contract last into prev.
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    for (Vertex v = 0; v < n; ++v) {
      weight[prev][v] += weight[last][v];
      weight[v][prev] = weight[prev][v];
    }
    weight[prev][prev] = 0;
    merged[last] = true;
  }
  return normalized(n, std::move(best_shore), best);
}

bool is_k_edge_connected(const Multigraph &g, std::int64_t t) {
  if (g.order() < 2)
    return g.order() == 1 && t <= 0;
  return global_min_cut(g).value >= t;
}

} // namespace kfactor
