#include "kfactor/generators.hpp"

#include "kfactor/connectivity.hpp"
#include "kfactor/error.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace kfactor {

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit)
      return x % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 mix(seed ^ (index * 0xd1b54a32d192ed03ull));
  mix.next();
  return mix.next();
}

Multigraph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 0)
    throw GraphError("vertex count and degree must be non-negative");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
    throw GraphError("n*d must be even, got n=" + std::to_string(n) + " d=" + std::to_string(d));

  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (Vertex v = 0; v < n; ++v)
    for (int j = 0; j < d; ++j)
      stubs.push_back(v);

  SplitMix64 rng(seed);
  for (std::size_t i = stubs.size(); i > 1; --i)
    std::swap(stubs[i - 1], stubs[rng.below(i)]);

  std::vector<EdgeSpec> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
    edges.push_back({stubs[i], stubs[i + 1], 1});
  return Multigraph::from_edge_list(n, edges);
}

GenResult random_regular_edge_connected(const GenSpec &spec) {
  if (spec.n < 1 || spec.n % 2 == 0)
    throw GraphError("generator needs an odd vertex count, got " + std::to_string(spec.n));
  if (spec.d < 0 || spec.d % 2 != 0)
    throw GraphError("generator needs an even degree, got " + std::to_string(spec.d));

  GenResult out;
  for (int attempt = 0; attempt < spec.max_tries; ++attempt) {
    const std::uint64_t sub = derive_seed(spec.seed, static_cast<std::uint64_t>(attempt));
    Multigraph g = random_regular(spec.n, spec.d, sub);
    out.attempts = attempt + 1;
    if (spec.simple) {
      const bool simple = !g.has_loops() && std::all_of(g.edges().begin(), g.edges().end(),
                                                        [](const Edge &e) { return e.multiplicity == 1; });
      if (!simple)
        continue;
    }
    if (!is_k_edge_connected(g, spec.lambda_min))
      continue;
    out.graph = std::move(g);
    out.used_seed = sub;
    return out;
  }
  return out;
}

} // namespace kfactor
