#include "kfactor/connectivity.hpp"
#include "kfactor/constructions.hpp"
#include "kfactor/error.hpp"
#include "kfactor/factor.hpp"
#include "kfactor/tutte.hpp"

#include "doctest.h"

#include <algorithm>
#include <map>

using namespace kfactor;

namespace {

std::map<int, int> degree_histogram(const Multigraph &g) {
  std::map<int, int> h;
  for (int d : g.degrees())
    ++h[d];
  return h;
}

bool all_have_factor_after_deletion(const Multigraph &g, const VertexSet &vertices, int k) {
  return std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) {
    return find_k_factor(delete_vertices(g, {v}).graph, k).has_value();
  });
}

bool none_have_factor_after_deletion(const Multigraph &g, const VertexSet &vertices, int k) {
  return std::none_of(vertices.begin(), vertices.end(), [&](Vertex v) {
    return find_k_factor(delete_vertices(g, {v}).graph, k).has_value();
  });
}

} // namespace

TEST_CASE("complete_minus_matching") {
  CHECK(degree_histogram(complete_minus_matching(5, 1)) == std::map<int, int>{{3, 2}, {4, 3}});
  CHECK(degree_histogram(complete_minus_matching(7, 2)) == std::map<int, int>{{5, 4}, {6, 3}});
  const auto c4 = complete_minus_matching(4, 2);
  CHECK(c4.is_regular(2)); // K4 minus a perfect matching is C4
  CHECK(c4.multiplicity(0, 1) == 0);
  CHECK(c4.multiplicity(2, 3) == 0);
  CHECK_THROWS_AS(complete_minus_matching(5, 3), GraphError);
}

TEST_CASE("complete_bipartite_minus_matching") {
  const auto p = complete_bipartite_minus_matching(2, 2, 1);
  CHECK(p.graph.degrees() == std::vector<int>{1, 2, 1, 2});
  CHECK(p.label("U") == VertexSet{0, 1});
  CHECK(p.label("W") == VertexSet{2, 3});

  const auto g2 = complete_bipartite_minus_matching(6, 6, 2);
  CHECK(degree_histogram(g2.graph) == std::map<int, int>{{5, 4}, {6, 8}});
  CHECK(g2.graph.degree(0) == 5);
  CHECK(g2.graph.degree(1) == 5);
  CHECK(g2.graph.degree(6) == 5);
  CHECK(g2.graph.degree(7) == 5);

  CHECK(complete_bipartite_minus_matching(3, 3, 0).graph.is_regular(3));
  CHECK_THROWS_AS(complete_bipartite_minus_matching(3, 2, 3), GraphError);
}

TEST_CASE("families are 2r-regular of odd order") {
  for (int r = 2; r <= 5; ++r) {
    for (int m = 1; m <= r; ++m) {
      const auto g = sharp_upper(r, m);
      CHECK(g.graph.order() == 6 * r + 1);
      CHECK(g.graph.is_regular(2 * r));
      CHECK(g.label("G1PART").size() == static_cast<std::size_t>(2 * r + 1));
      CHECK(g.label("U").size() == static_cast<std::size_t>(2 * r));
      CHECK(g.label("W").size() == static_cast<std::size_t>(2 * r));
    }
    const auto lower = sharp_lower(r);
    CHECK(lower.graph.order() == (2 * r - 1) * (2 * r + 1) + 2 * r - 2);
    CHECK(lower.graph.is_regular(2 * r));
    CHECK(lower.label("M").size() == static_cast<std::size_t>(2 * r - 2));
    CHECK(lower.labels.size() == static_cast<std::size_t>(2 * r));
    for (int m = 1; 2 * m <= r; ++m) {
      const auto cond = sharp_condition(r, m);
      CHECK(cond.graph.order() == 8 * r + 1);
      CHECK(cond.graph.is_regular(2 * r));
      CHECK(cond.label("U").size() == static_cast<std::size_t>(2 * r));
      CHECK(cond.label("W").size() == static_cast<std::size_t>(2 * r - 1));
    }
  }
  CHECK(sharp_upper(2, 1).graph.order() == 13);
  CHECK(sharp_lower(3).graph.order() == 39);
  CHECK(sharp_condition(6, 3).graph.order() == 49);
  CHECK(sharp_condition(8, 4).graph.order() == 65);
  CHECK(sharp_condition(8, 4).graph.is_regular(16));
}

TEST_CASE("parameter checks") {
  CHECK_THROWS_AS(sharp_upper(1, 1), GraphError);
  CHECK_THROWS_AS(sharp_upper(3, 4), GraphError);
  CHECK_THROWS_AS(sharp_upper(3, 0), GraphError);
  CHECK_THROWS_AS(sharp_lower(1), GraphError);
  CHECK_THROWS_AS(sharp_condition(5, 3), GraphError);
  CHECK_THROWS_AS(sharp_condition(4, 0), GraphError);
}

TEST_CASE("sharp_upper: the joining edges form the minimum cut") {
  for (int r = 2; r <= 4; ++r) {
    for (int m = 1; m <= r; ++m) {
      const auto g = sharp_upper(r, m);
      const auto cut = global_min_cut(g.graph);
      CHECK(cut.value == 2 * m);
      // With m = r a single vertex ties the joining cut.
      if (m < r)
        CHECK(cut.side == g.label("G1PART"));
    }
  }
}

TEST_CASE("sharp_condition is 2m-edge-connected") {
  CHECK(global_min_cut(sharp_condition(4, 1).graph).value == 2);
  CHECK(global_min_cut(sharp_condition(4, 2).graph).value == 4);
  CHECK(global_min_cut(sharp_condition(6, 3).graph).value == 6);
}

TEST_CASE("sharp_lower: M-vertex deletion leaves 2r-1 odd components") {
  for (int r = 2; r <= 3; ++r) {
    const auto h = sharp_lower(r);
    const auto &m = h.label("M");
    CHECK(odd_component_count(delete_vertices(h.graph, m).graph) == 2 * r - 1);
    for (Vertex v : m) {
      const auto del = delete_vertices(h.graph, {v});
      CHECK(one_factor_deficiency(del.graph, del.transport(m.without(v))) == 2);
    }
    CHECK(none_have_factor_after_deletion(h.graph, m, 1));
  }
}

TEST_CASE("sharp_upper(3,2): k-factors below the bound, none above it on U and W") {
  const auto g = sharp_upper(3, 2);
  const auto everything = VertexSet::range(0, g.graph.order());
  const auto sides = g.label("U").united(g.label("W"));
  CHECK(all_have_factor_after_deletion(g.graph, everything, 2));
  CHECK(none_have_factor_after_deletion(g.graph, sides, 3));
}

TEST_CASE("sharp_upper(4,3): even and odd k up to m, none for m* = 4") {
  const auto g = sharp_upper(4, 3);
  const auto everything = VertexSet::range(0, g.graph.order());
  const auto sides = g.label("U").united(g.label("W"));
  CHECK(all_have_factor_after_deletion(g.graph, everything, 2));
  CHECK(all_have_factor_after_deletion(g.graph, everything, 3)); // 2m = 6 > r = 4
  CHECK(none_have_factor_after_deletion(g.graph, sides, 4));
}

TEST_CASE("sharp_condition: odd k <= m fails after deleting any U vertex") {
  const auto g = sharp_condition(4, 2);
  CHECK(none_have_factor_after_deletion(g.graph, g.label("U"), 1));

  const auto big = sharp_condition(6, 3);
  const Vertex u = big.label("U").members().front();
  const auto h = delete_vertices(big.graph, {u}).graph;
  CHECK_FALSE(find_k_factor(h, 3).has_value());
  CHECK_FALSE(find_k_factor(h, 1).has_value());
}
