#pragma once

#include "kfactor/graph.hpp"

#include <cstdint>

namespace kfactor {

struct CutResult {
  std::int64_t value = 0;
  VertexSet side; // one shore; 0 < |side| < n
};

/// Global minimum edge cut, multiplicities as weights (Stoer-Wagner).
///
/// Loops are ignored. A disconnected graph yields value 0 with the
/// component of vertex 0 as the side. The reported side is the smaller
/// shore; on a tie, the shore containing vertex 0. Throws GraphError for
/// n < 2.
CutResult global_min_cut(const Multigraph &g);

/// True iff g is connected and its edge connectivity is at least t.
bool is_k_edge_connected(const Multigraph &g, std::int64_t t);

} // namespace kfactor
