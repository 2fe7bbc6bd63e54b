#pragma once

#include "kfactor/graph.hpp"

#include <cstdint>
#include <optional>

namespace kfactor {

/// Deterministic 64-bit PRNG (SplitMix64). Output is fixed by this code,
/// independent of the standard library implementation.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) noexcept;

private:
  std::uint64_t state_;
};

/// Seed for attempt `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Configuration model: n*d stubs, Fisher-Yates shuffled, paired in order.
/// Loops and parallel edges are kept. Throws GraphError if n*d is odd.
Multigraph random_regular(int n, int d, std::uint64_t seed);

struct GenSpec {
  int n = 0;          // odd
  int d = 0;          // even
  int lambda_min = 0; // required edge connectivity
  std::uint64_t seed = 0;
  int max_tries = 1000;
  bool simple = false; // reject samples with loops or parallel edges
};

struct GenResult {
  std::optional<Multigraph> graph;
  int attempts = 0;            // samples drawn
  std::uint64_t used_seed = 0; // sub-seed of the accepted sample
};

/// Samples random_regular(n, d, derive_seed(seed, i)) for i = 0, 1, ...
/// and returns the first sample that is lambda_min-edge-connected (and
/// simple, if requested). graph is empty when max_tries is exhausted.
/// Throws GraphError if n is even, d is odd, or either is negative.
GenResult random_regular_edge_connected(const GenSpec &spec);

} // namespace kfactor
