#pragma once

#include "kfactor/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace kfactor {

/// Whether (r, m, k) satisfies the hypotheses of the vertex-deleted
/// k-factor theorem: 2 <= m < r and either k even with 2 <= k <= m, or
/// k odd with 3 <= k <= m and 2m > r.
bool in_theorem_scope(int r, int m, int k);

struct TheoremParams {
  int r = 0;
  int m = 0;
  int k = 0;
  int trials = 0;
  int n_min = 0; // trial i uses the i-th odd value of [n_min, n_max], cycling
  int n_max = 0;
  std::uint64_t seed = 0;
  int max_tries = 2000; // generator budget per trial
  std::optional<std::filesystem::path> dump_dir;
};

struct TrialRecord {
  int index = 0;
  int n = 0;
  std::uint64_t trial_seed = 0; // derive_seed(run seed, index)
  std::uint64_t graph_seed = 0; // sub-seed of the accepted sample
  int attempts = 0;
  bool generated = false; // false: generator budget exhausted
  std::uint64_t graph_hash = 0;
  std::int64_t lambda = 0;
  std::vector<bool> factor_found; // per deleted vertex, validated
  std::vector<Vertex> failing;
  std::string dump_path;

  friend bool operator==(const TrialRecord &, const TrialRecord &) = default;
};

enum class Verdict { Pass, Fail, Incomplete };

const char *to_string(Verdict v) noexcept;

struct TheoremRunReport {
  TheoremParams params;
  bool in_scope = false;
  std::vector<TrialRecord> trials;
  Verdict verdict = Verdict::Incomplete;
};

/// For every vertex v, searches for a k-factor of g - v and re-checks it
/// with verify_factor. Fills factor_found, failing, graph_hash and lambda.
TrialRecord check_vertex_deleted_factors(const Multigraph &g, int k);

/// Generates `trials` 2r-regular, 2m-edge-connected multigraphs of odd
/// order and checks g - v for a k-factor at every vertex. Hypotheses of
/// each sample are re-validated before it counts. Failing instances are
/// written to dump_dir when one is given.
///
/// Verdict: Fail if any (trial, vertex) lacks a validated factor,
/// otherwise Incomplete if some trial exhausted its generator budget,
/// otherwise Pass. Parameters outside the theorem's hypotheses still run,
/// with in_scope = false.
TheoremRunReport verify_theorem(const TheoremParams &params);

/// Same check on a caller-supplied graph, recorded as trial 0.
TheoremRunReport verify_theorem_on_graph(const Multigraph &g, int r, int m, int k,
                                         const std::optional<std::filesystem::path> &dump_dir = {});

} // namespace kfactor
