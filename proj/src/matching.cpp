#include "kfactor/matching.hpp"

#include "kfactor/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace kfactor {
namespace {

void reject_loops(const Multigraph &g) {
  if (g.has_loops())
    throw GraphError("matching requires a loopless graph");
}

Matching from_mates(const std::vector<Vertex> &mate) {
  Matching m;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
    if (mate[v] > v)
      m.pairs.emplace_back(v, mate[v]);
  return m;
}

// Edmonds' algorithm with explicit blossom bases. Search state is reset
// for every root; mate persists across roots.
class BlossomSearch {
public:
  explicit BlossomSearch(const Multigraph &g) : n_(g.order()), adj_(n_) {
    for (Vertex v = 0; v < n_; ++v)
      for (const auto &inc : g.incident(v))
        adj_[v].push_back(inc.other);
    mate_.assign(n_, -1);
    parent_.resize(n_);
    base_.resize(n_);
    in_tree_.resize(n_);
    in_blossom_.resize(n_);
    lca_mark_.resize(n_);
  }

  std::vector<Vertex> run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] >= 0)
        continue;
      for (Vertex w : adj_[v]) {
        if (mate_[w] < 0) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] >= 0)
        continue;
      Vertex end = find_augmenting_path(root);
      while (end >= 0) {
        const Vertex pv = parent_[end];
        const Vertex next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    return mate_;
  }

private:
  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), false);
    for (;;) {
      a = base_[a];
      lca_mark_[a] = true;
      if (mate_[a] < 0)
        break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b])
        return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex v = 0; v < n_; ++v)
      base_[v] = v;
    queue_.clear();
    in_tree_[root] = true;
    queue_.push_back(root);

    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      for (Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to)
          continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          const Vertex b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!in_tree_[i]) {
                in_tree_[i] = true;
                queue_.push_back(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0)
            return to;
          in_tree_[mate_[to]] = true;
          queue_.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
  std::vector<bool> lca_mark_;
  std::vector<Vertex> queue_;
};

} // namespace

std::vector<Vertex> Matching::mates(int n) const {
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  for (const auto &[u, v] : pairs) {
    mate[u] = v;
    mate[v] = u;
  }
  return mate;
}

Matching max_matching(const Multigraph &g) {
  reject_loops(g);
  return from_mates(BlossomSearch(g).run());
}

Matching brute_force_max_matching(const Multigraph &g) {
  reject_loops(g);
  const int n = g.order();
  if (n > 12)
    throw GuardError("brute-force matching is limited to 12 vertices, got " + std::to_string(n));

  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge &e : g.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }

  // best[mask] = maximum matching size on the vertices in mask.
  const std::uint32_t full = (1u << n) - 1;
  std::vector<int> best(full + 1, -1);
  auto solve = [&](auto &&self, std::uint32_t mask) -> int {
    if (mask == 0)
      return 0;
    int &slot = best[mask];
    if (slot >= 0)
      return slot;
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    int value = self(self, rest);
    for (std::uint32_t cand = nbr[v] & rest; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      value = std::max(value, 1 + self(self, rest & ~(1u << w)));
    }
    return slot = value;
  };
  solve(solve, full);

  // Walk the table to recover one optimal matching.
  Matching m;
  std::uint32_t mask = full;
  while (mask) {
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    const int target = solve(solve, mask);
    if (solve(solve, rest) == target) {
      mask = rest;
      continue;
    }
    for (std::uint32_t cand = nbr[v] & rest; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      if (1 + solve(solve, rest & ~(1u << w)) == target) {
        m.pairs.emplace_back(v, w);
        mask = rest & ~(1u << w);
        break;
      }
    }
  }
  return m;
}

void check_matching(const Multigraph &g, const Matching &m) {
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (const auto &[u, v] : m.pairs) {
    if (u == v)
      throw GraphError("matching contains a loop at " + std::to_string(u));
    if (g.multiplicity(u, v) == 0)
      throw GraphError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                       ") is not an edge");
    if (used[u] || used[v])
      throw GraphError("vertex used twice in matching");
    used[u] = used[v] = true;
  }
}

bool is_perfect(const Multigraph &g, const Matching &m) {
  check_matching(g, m);
  return 2 * m.size() == static_cast<std::size_t>(g.order());
}

} // namespace kfactor
