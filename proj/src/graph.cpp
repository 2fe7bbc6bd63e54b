#include "kfactor/graph.hpp"

#include "kfactor/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace kfactor {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 0)
    throw GraphError("negative vertex index " + std::to_string(members_.front()));
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  std::vector<Vertex> members(static_cast<std::size_t>(std::max(0, last - first)));
  std::iota(members.begin(), members.end(), first);
  return VertexSet(std::move(members));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet out;
  out.members_.reserve(members_.size());
  for (Vertex x : members_)
    if (x != v)
      out.members_.push_back(x);
  return out;
}

VertexSet VertexSet::united(const VertexSet &other) const {
  VertexSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

bool VertexSet::intersects(const VertexSet &other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b)
      return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

std::vector<bool> VertexSet::mask(int n) const {
  if (!members_.empty() && members_.back() >= n)
    throw GraphError("vertex " + std::to_string(members_.back()) +
                     " out of range for graph of order " + std::to_string(n));
  std::vector<bool> out(static_cast<std::size_t>(n), false);
  for (Vertex v : members_)
    out[v] = true;
  return out;
}

Multigraph Multigraph::from_edge_list(int n, std::span<const EdgeSpec> edges) {
  if (n < 0)
    throw GraphError("negative vertex count");
  std::map<std::pair<Vertex, Vertex>, std::int64_t> merged;
  for (const EdgeSpec &e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for graph of order " + std::to_string(n));
    if (e.multiplicity < 1)
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has multiplicity " + std::to_string(e.multiplicity));
    merged[std::minmax(e.u, e.v)] += e.multiplicity;
  }

  Multigraph g;
  g.n_ = n;
  g.degrees_.assign(static_cast<std::size_t>(n), 0);
  g.incident_.resize(static_cast<std::size_t>(n));
  g.edges_.reserve(merged.size());
  for (const auto &[pair, mult] : merged) {
    const auto [u, v] = pair;
    const std::size_t index = g.edges_.size();
    g.edges_.push_back({u, v, static_cast<int>(mult)});
    g.total_ += mult;
    if (u == v) {
      g.degrees_[u] += 2 * static_cast<int>(mult);
      g.loops_ += mult;
      g.incident_[u].push_back({u, static_cast<int>(mult), index});
    } else {
      g.degrees_[u] += static_cast<int>(mult);
      g.degrees_[v] += static_cast<int>(mult);
      g.incident_[u].push_back({v, static_cast<int>(mult), index});
      g.incident_[v].push_back({u, static_cast<int>(mult), index});
    }
  }
  for (auto &list : g.incident_)
    std::sort(list.begin(), list.end(),
              [](const Incidence &a, const Incidence &b) { return a.other < b.other; });
  return g;
}

void Multigraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(n_));
}

int Multigraph::degree(Vertex v) const {
  check_vertex(v);
  return degrees_[v];
}

bool Multigraph::is_regular(int d) const {
  return std::all_of(degrees_.begin(), degrees_.end(), [d](int x) { return x == d; });
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto key = std::minmax(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge &e, const auto &k) {
    return std::pair(e.u, e.v) < std::pair(k.first, k.second);
  });
  if (it != edges_.end() && it->u == key.first && it->v == key.second)
    return it->multiplicity;
  return 0;
}

const std::vector<Multigraph::Incidence> &Multigraph::incident(Vertex v) const {
  check_vertex(v);
  return incident_[v];
}

std::uint64_t Multigraph::fingerprint() const noexcept {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const Edge &e : edges_) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
    mix(static_cast<std::uint64_t>(e.multiplicity));
  }
  return h;
}

std::int64_t edges_between(const Multigraph &g, const VertexSet &a, const VertexSet &b) {
  const auto in_a = a.mask(g.order());
  const auto in_b = b.mask(g.order());
  std::int64_t total = 0;
  for (const Edge &e : g.edges())
    if ((in_a[e.u] && in_b[e.v]) || (in_a[e.v] && in_b[e.u]))
      total += e.multiplicity;
  return total;
}

VertexSet VertexDeletion::transport(const VertexSet &original) const {
  std::vector<Vertex> out;
  out.reserve(original.size());
  for (Vertex v : original) {
    if (v >= static_cast<Vertex>(old_to_new.size()))
      throw GraphError("vertex " + std::to_string(v) + " out of range");
    if (old_to_new[v] >= 0)
      out.push_back(old_to_new[v]);
  }
  return VertexSet(std::move(out));
}

VertexDeletion delete_vertices(const Multigraph &g, const VertexSet &removed) {
  const auto gone = removed.mask(g.order());
  VertexDeletion out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) {
      out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<EdgeSpec> kept;
  kept.reserve(g.edges().size());
  for (const Edge &e : g.edges())
    if (!gone[e.u] && !gone[e.v])
      kept.push_back({out.old_to_new[e.u], out.old_to_new[e.v], e.multiplicity});
  out.graph =
      Multigraph::from_edge_list(static_cast<int>(out.new_to_old.size()), kept);
  return out;
}

ComponentPartition components(const Multigraph &g) {
  const int n = g.order();
  ComponentPartition out;
  out.block_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (out.block_of[root] >= 0)
      continue;
    const int id = static_cast<int>(out.blocks.size());
    std::vector<Vertex> members;
    out.block_of[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const auto &inc : g.incident(v)) {
        if (out.block_of[inc.other] < 0) {
          out.block_of[inc.other] = id;
          stack.push_back(inc.other);
        }
      }
    }
    out.blocks.emplace_back(std::move(members));
  }
  return out;
}

int odd_component_count(const Multigraph &g) {
  const auto parts = components(g);
  return static_cast<int>(std::count_if(parts.blocks.begin(), parts.blocks.end(),
                                        [](const VertexSet &b) { return b.size() % 2 == 1; }));
}

const VertexSet &LabeledGraph::label(const std::string &name) const {
  auto it = labels.find(name);
  if (it == labels.end())
    throw GraphError("no label named '" + name + "'");
  return it->second;
}

} // namespace kfactor
