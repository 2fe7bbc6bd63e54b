#include "kfactor/connectivity.hpp"
#include "kfactor/error.hpp"
#include "kfactor/generators.hpp"

#include "doctest.h"

using namespace kfactor;

TEST_CASE("random_regular produces d-regular multigraphs") {
  const auto g = random_regular(5, 2, 1);
  CHECK(g.order() == 5);
  CHECK(g.is_regular(2));
  CHECK(g.total_multiplicity() == 5);

  for (std::uint64_t seed = 0; seed < 100; ++seed)
    CHECK(random_regular(9, 6, seed).is_regular(6));

  CHECK_THROWS_AS(random_regular(5, 3, 0), GraphError);
  CHECK(random_regular(0, 4, 0).order() == 0);
}

TEST_CASE("random_regular is deterministic per seed") {
  CHECK(random_regular(7, 4, 42) == random_regular(7, 4, 42));
  CHECK(random_regular(7, 4, 42).fingerprint() == random_regular(7, 4, 42).fingerprint());
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    differs = differs || !(random_regular(7, 4, seed) == random_regular(7, 4, 42));
  CHECK(differs);
}

TEST_CASE("SplitMix64 stays below its bound") {
  SplitMix64 rng(1);
  for (std::uint64_t bound = 1; bound < 200; ++bound)
    CHECK(rng.below(bound) < bound);
}

TEST_CASE("random_regular_edge_connected accepts a connected sample") {
  const GenSpec spec{11, 6, 4, 7, 1000, false};
  const auto res = random_regular_edge_connected(spec);
  REQUIRE(res.graph.has_value());
  CHECK(res.graph->order() == 11);
  CHECK(res.graph->is_regular(6));
  CHECK(global_min_cut(*res.graph).value >= 4);
  CHECK(res.attempts >= 1);
  CHECK(*res.graph == random_regular(11, 6, res.used_seed));
  CHECK(derive_seed(7, static_cast<std::uint64_t>(res.attempts - 1)) == res.used_seed);

  const auto again = random_regular_edge_connected(spec);
  CHECK(*again.graph == *res.graph);
  CHECK(again.attempts == res.attempts);
}

TEST_CASE("random_regular_edge_connected fails when connectivity exceeds the degree") {
  const auto res = random_regular_edge_connected({5, 2, 4, 1, 50, false});
  CHECK_FALSE(res.graph.has_value());
  CHECK(res.attempts == 50);
}

TEST_CASE("random_regular_edge_connected validates its spec") {
  CHECK_THROWS_AS(random_regular_edge_connected({10, 4, 2, 0, 5, false}), GraphError);
  CHECK_THROWS_AS(random_regular_edge_connected({9, 3, 2, 0, 5, false}), GraphError);
}

TEST_CASE("accepted graphs re-verify across 25 seeds") {
  int accepted = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto res = random_regular_edge_connected({13, 8, 6, seed, 200, false});
    if (!res.graph)
      continue;
    ++accepted;
    CHECK(res.graph->order() % 2 == 1);
    CHECK(res.graph->is_regular(8));
    CHECK(is_k_edge_connected(*res.graph, 6));
  }
  MESSAGE("n=13 d=8 lambda>=6: accepted " << accepted << " of 25 seeds");
  CHECK(accepted > 0);
}

TEST_CASE("simple flag rejects loops and parallel edges") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto res = random_regular_edge_connected({11, 4, 2, seed, 500, true});
    REQUIRE(res.graph.has_value());
    CHECK_FALSE(res.graph->has_loops());
    for (const Edge &e : res.graph->edges())
      CHECK(e.multiplicity == 1);
  }
}
