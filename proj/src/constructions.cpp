#include "kfactor/constructions.hpp"

#include "kfactor/error.hpp"

#include <string>
#include <vector>

namespace kfactor {
namespace {

// Appends K_size minus the canonical t-matching at offset.
void add_complete_minus_matching(std::vector<EdgeSpec> &edges, int offset, int size, int t) {
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (!(j == i + 1 && i % 2 == 0 && j < 2 * t))
        edges.push_back({offset + i, offset + j, 1});
}

} // namespace

Multigraph complete_minus_matching(int n, int t) {
  if (n < 0 || t < 0 || 2 * t > n)
    throw GraphError("cannot delete a matching of size " + std::to_string(t) + " from K_" +
                     std::to_string(n));
  std::vector<EdgeSpec> edges;
  add_complete_minus_matching(edges, 0, n, t);
  return Multigraph::from_edge_list(n, edges);
}

LabeledGraph complete_bipartite_minus_matching(int a, int b, int t) {
  if (a < 0 || b < 0 || t < 0 || t > a || t > b)
    throw GraphError("cannot delete a matching of size " + std::to_string(t) + " from K_" +
                     std::to_string(a) + "," + std::to_string(b));
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (!(i == j && i < t))
        edges.push_back({i, a + j, 1});
  return {Multigraph::from_edge_list(a + b, edges),
          {{"U", VertexSet::range(0, a)}, {"W", VertexSet::range(a, a + b)}}};
}

LabeledGraph sharp_upper(int r, int m) {
  if (r < 2 || m < 1 || m > r)
    throw GraphError("sharp_upper needs r >= 2 and 1 <= m <= r");
  const int clique = 2 * r + 1;
  const int u0 = clique;
  const int w0 = u0 + 2 * r;
  const int n = w0 + 2 * r;

  std::vector<EdgeSpec> edges;
  add_complete_minus_matching(edges, 0, clique, m);
  for (int i = 0; i < 2 * r; ++i)
    for (int j = 0; j < 2 * r; ++j)
      if (!(i == j && i < m))
        edges.push_back({u0 + i, w0 + j, 1});
  for (int i = 0; i < m; ++i) {
    edges.push_back({i, u0 + i, 1});
    edges.push_back({m + i, w0 + i, 1});
  }
  return {Multigraph::from_edge_list(n, edges),
          {{"G1PART", VertexSet::range(0, clique)},
           {"U", VertexSet::range(u0, w0)},
           {"W", VertexSet::range(w0, n)}}};
}

LabeledGraph sharp_lower(int r) {
  if (r < 2)
    throw GraphError("sharp_lower needs r >= 2");
  const int clique = 2 * r + 1;
  const int copies = 2 * r - 1;
  const int special = 2 * r - 2;
  const int m0 = copies * clique;
  const int n = m0 + special;

  LabeledGraph out;
  std::vector<EdgeSpec> edges;
  for (int c = 0; c < copies; ++c) {
    const int offset = c * clique;
    add_complete_minus_matching(edges, offset, clique, r - 1);
    for (int i = 0; i < special; ++i)
      edges.push_back({offset + i, m0 + i, 1});
    out.labels["COPY" + std::to_string(c + 1)] = VertexSet::range(offset, offset + clique);
  }
  for (int i = 0; i < special; i += 2)
    edges.push_back({m0 + i, m0 + i + 1, 1});
  out.labels["M"] = VertexSet::range(m0, n);
  out.graph = Multigraph::from_edge_list(n, edges);
  return out;
}

LabeledGraph sharp_condition(int r, int m) {
  if (m < 1 || 2 * m > r)
    throw GraphError("sharp_condition needs m >= 1 and 2m <= r");
  const int u_size = 2 * r;
  const int w_size = 2 * r - 1;
  const int clique = 2 * r + 1;
  const int w0 = u_size;
  const int c1 = w0 + w_size;
  const int c2 = c1 + clique;
  const int n = c2 + clique;

  std::vector<EdgeSpec> edges;
  for (int i = 0; i < u_size; ++i)
    for (int j = 0; j < w_size; ++j)
      edges.push_back({i, w0 + j, 1});
  add_complete_minus_matching(edges, c1, clique, m);
  add_complete_minus_matching(edges, c2, clique, m);
  for (int i = 0; i < 2 * m; ++i) {
    edges.push_back({i, c1 + i, 1});
    edges.push_back({2 * m + i, c2 + i, 1});
  }
  for (int i = 4 * m; i < u_size; i += 2)
    edges.push_back({i, i + 1, 1});

  return {Multigraph::from_edge_list(n, edges),
          {{"U", VertexSet::range(0, w0)},
           {"W", VertexSet::range(w0, c1)},
           {"COPY1", VertexSet::range(c1, c2)},
           {"COPY2", VertexSet::range(c2, n)}}};
}

} // namespace kfactor
