#pragma once

#include "kfactor/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kfactor {

/// One component C of G - (D u S) with its k-parity data.
struct ComponentParity {
  VertexSet block;
  std::int64_t edges_to_s = 0; // e_G(V(C), S)
  std::int64_t k_size = 0;     // k |C|
  bool k_odd = false;          // edges_to_s + k_size is odd
};

struct KOddCount {
  int q = 0;
  std::vector<ComponentParity> components;
};

/// Tutte's k-factor functional for one disjoint pair (D, S):
///
///   delta = k|D| + sum_{x in S} d_G(x) - k|S| - e_G(D, S) - q,
///
/// where q counts the k-odd components of G - (D u S). delta < 0 for some
/// pair exactly when G has no k-factor, and delta = k n (mod 2) always.
struct DeficiencyReport {
  std::int64_t delta = 0;
  int q = 0;
  std::vector<ComponentParity> components;
  VertexSet d;
  VertexSet s;
  int k = 0;
};

/// Counts components C of G - (D u S) with e_G(V(C), S) + k|C| odd.
/// Throws GraphError if D and S overlap or leave the vertex range.
KOddCount k_odd_count(const Multigraph &g, const VertexSet &d, const VertexSet &s, int k);

/// Evaluates delta both as written above and as
/// k|D| - k|S| + sum_{x in S} d_{G-D}(x) - q on the graph with D removed;
/// throws std::logic_error if the two disagree.
DeficiencyReport deficiency(const Multigraph &g, const VertexSet &d, const VertexSet &s, int k);

/// c_o(G - S) - |S|. A positive value certifies that G has no 1-factor.
std::int64_t one_factor_deficiency(const Multigraph &g, const VertexSet &s);

struct Witness {
  VertexSet d;
  VertexSet s;
  DeficiencyReport report;
};

inline constexpr int kDefaultWitnessGuard = 15;

/// Exhaustive search for a pair (D, S) with negative deficiency.
///
/// Assignments out/D/S are enumerated as a base-3 counter in which vertex i
/// is digit i (vertex 0 least significant; 0 = out, 1 = D, 2 = S), and the
/// first negative pair in that order is returned. Pairs whose q-free bound
/// k|D| + sum_S (d_{G-D}(x) - k) - |V - D - S| is already >= 0 are skipped
/// without computing components. Throws GuardError for n > size_guard.
std::optional<Witness> find_witness(const Multigraph &g, int k,
                                    int size_guard = kDefaultWitnessGuard);

} // namespace kfactor
