#include "kfactor/tutte.hpp"

#include "kfactor/error.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace kfactor {
namespace {

void require_disjoint(const Multigraph &g, const VertexSet &d, const VertexSet &s) {
  d.mask(g.order());
  s.mask(g.order());
  if (d.intersects(s))
    throw GraphError("D and S must be disjoint");
}

} // namespace

KOddCount k_odd_count(const Multigraph &g, const VertexSet &d, const VertexSet &s, int k) {
  require_disjoint(g, d, s);
  const auto removed = delete_vertices(g, d.united(s));
  const auto parts = components(removed.graph);
  const auto in_s = s.mask(g.order());

  KOddCount out;
  for (const VertexSet &block : parts.blocks) {
    std::vector<Vertex> original;
    original.reserve(block.size());
    for (Vertex v : block)
      original.push_back(removed.new_to_old[v]);
    ComponentParity c;
    c.block = VertexSet(std::move(original));
    for (Vertex v : c.block)
      for (const auto &inc : g.incident(v))
        if (in_s[inc.other])
          c.edges_to_s += inc.multiplicity;
    c.k_size = static_cast<std::int64_t>(k) * static_cast<std::int64_t>(c.block.size());
    c.k_odd = (c.edges_to_s + c.k_size) % 2 != 0;
    out.q += c.k_odd ? 1 : 0;
    out.components.push_back(std::move(c));
  }
  return out;
}

DeficiencyReport deficiency(const Multigraph &g, const VertexSet &d, const VertexSet &s, int k) {
  KOddCount odd = k_odd_count(g, d, s, k);
  const std::int64_t kk = k;
  const auto size_d = static_cast<std::int64_t>(d.size());
  const auto size_s = static_cast<std::int64_t>(s.size());

  std::int64_t degree_sum = 0;
  for (Vertex x : s)
    degree_sum += g.degree(x);
  const std::int64_t delta = kk * size_d + degree_sum - kk * size_s - edges_between(g, d, s) - odd.q;

  // Second route: degrees measured in G - D directly.
  const auto without_d = delete_vertices(g, d);
  std::int64_t residual_sum = 0;
  for (Vertex x : without_d.transport(s))
    residual_sum += without_d.graph.degree(x);
  const std::int64_t check = kk * size_d - kk * size_s + residual_sum - odd.q;
  if (check != delta)
    throw std::logic_error("deficiency forms disagree: " + std::to_string(delta) + " vs " +
                           std::to_string(check));

  return {delta, odd.q, std::move(odd.components), d, s, k};
}

std::int64_t one_factor_deficiency(const Multigraph &g, const VertexSet &s) {
  const auto removed = delete_vertices(g, s);
  return odd_component_count(removed.graph) - static_cast<std::int64_t>(s.size());
}

std::optional<Witness> find_witness(const Multigraph &g, int k, int size_guard) {
  const int n = g.order();
  if (k < 1)
    throw GraphError("factor degree must be at least 1, got " + std::to_string(k));
  if (n > size_guard)
    throw GuardError("witness search limited to " + std::to_string(size_guard) +
                     " vertices, got " + std::to_string(n));
  if (n > 30)
    throw GuardError("witness search cannot exceed 30 vertices");

  using Mask = std::uint32_t;
  std::vector<std::vector<std::int64_t>> mult(n, std::vector<std::int64_t>(n, 0));
  std::vector<Mask> nbr(n, 0);
  for (const Edge &e : g.edges()) {
    mult[e.u][e.v] += e.multiplicity;
    if (!e.is_loop())
      mult[e.v][e.u] += e.multiplicity;
    nbr[e.u] |= Mask{1} << e.v;
    nbr[e.v] |= Mask{1} << e.u;
  }
  const Mask all = (Mask{1} << n) - 1;

  std::vector<int> digit(n, 0);
  Mask in_d = 0;
  Mask in_s = 0;
  const std::int64_t kk = k;
  for (;;) {
    // sum_{x in S} (d_{G-D}(x) - k) + k|D|
    std::int64_t bound = kk * std::popcount(in_d);
    for (Mask rest = in_s; rest; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      std::int64_t deg = g.degree(x);
      for (Mask dn = nbr[x] & in_d; dn; dn &= dn - 1)
        deg -= mult[x][std::countr_zero(dn)];
      bound += deg - kk;
    }
    const Mask outside = all & ~(in_d | in_s);

    if (bound - std::popcount(outside) < 0) {
      int q = 0;
      Mask unseen = outside;
      while (unseen) {
        Mask comp = unseen & (~unseen + 1);
        Mask frontier = comp;
        while (frontier) {
          Mask grow = 0;
          for (Mask f = frontier; f; f &= f - 1)
            grow |= nbr[std::countr_zero(f)];
          grow &= outside & ~comp;
          comp |= grow;
          frontier = grow;
        }
        unseen &= ~comp;
        std::int64_t parity = kk * std::popcount(comp);
        for (Mask c = comp; c; c &= c - 1) {
          const int x = std::countr_zero(c);
          for (Mask sn = nbr[x] & in_s; sn; sn &= sn - 1)
            parity += mult[x][std::countr_zero(sn)];
        }
        q += static_cast<int>(parity & 1);
      }
      if (bound - q < 0) {
        std::vector<Vertex> dv;
        std::vector<Vertex> sv;
        for (int v = 0; v < n; ++v) {
          if (digit[v] == 1)
            dv.push_back(v);
          else if (digit[v] == 2)
            sv.push_back(v);
        }
        Witness w{VertexSet(std::move(dv)), VertexSet(std::move(sv)), {}};
        w.report = deficiency(g, w.d, w.s, k);
        if (w.report.delta != bound - q)
          throw std::logic_error("witness search and deficiency disagree");
        return w;
      }
    }

    // Advance the base-3 counter, vertex 0 least significant.
    int i = 0;
    for (; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      if (digit[i] == 0) {
        digit[i] = 1;
        in_d |= bit;
        break;
      }
      if (digit[i] == 1) {
        digit[i] = 2;
        in_d &= ~bit;
        in_s |= bit;
        break;
      }
      digit[i] = 0;
      in_s &= ~bit;
    }
    if (i == n)
      return std::nullopt;
  }
}

} // namespace kfactor
