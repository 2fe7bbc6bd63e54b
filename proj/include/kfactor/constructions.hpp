#pragma once

#include "kfactor/graph.hpp"

namespace kfactor {

/// K_n minus the matching {(0,1), (2,3), ..., (2t-2, 2t-1)}.
/// Vertices 0..2t-1 have degree n-2, the rest n-1. Requires 2t <= n.
Multigraph complete_minus_matching(int n, int t);

/// K_{a,b} minus the matching U_i W_i for i < t. U = 0..a-1, W = a..a+b-1.
/// Requires t <= min(a, b).
LabeledGraph complete_bipartite_minus_matching(int a, int b, int t);

/// Extremal family for the upper bound on k.
///
/// K_{2r+1} minus an m-matching (label G1PART, vertices 0..2r) joined to
/// K_{2r,2r} minus an m-matching (labels U, W). Removing an m-matching from
/// the bipartite part leaves exactly m vertices of degree 2r-1 on each side,
/// so the attachment is forced up to ordering: the i-th deficient vertex of
/// G1PART is joined to the i-th of (U_0..U_{m-1}, W_0..W_{m-1}).
/// The result is 2r-regular of order 6r+1, and the 2m joining edges form a
/// cut. Requires r >= 2 and 1 <= m <= r.
LabeledGraph sharp_upper(int r, int m);

/// Extremal family for the lower bound on k.
///
/// 2r-1 copies of K_{2r+1} minus an (r-1)-matching (labels COPY1..), then
/// 2r-2 vertices carrying a perfect matching (label M, pairs M_0M_1, ...).
/// The i-th deficient vertex of every copy is joined to M_i, so each M vertex
/// gets 2r-1 copy edges plus its matching edge. Requires r >= 2.
LabeledGraph sharp_lower(int r);

/// Extremal family for the condition 2m > r.
///
/// K_{2r,2r-1} with U (2r vertices) and W (2r-1 vertices) first, then two
/// copies of K_{2r+1} minus an m-matching (COPY1, COPY2). U_0..U_{2m-1} are
/// joined to COPY1's deficient vertices, U_{2m}..U_{4m-1} to COPY2's, and the
/// remaining U vertices are paired consecutively. Order 8r+1, 2r-regular.
/// Requires m >= 1 and 2m <= r.
LabeledGraph sharp_condition(int r, int m);

} // namespace kfactor
