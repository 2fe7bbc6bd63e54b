// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include "kfactor/connectivity.hpp"
#include "kfactor/constructions.hpp"
#include "kfactor/factor.hpp"
#include "kfactor/generators.hpp"
#include "kfactor/harness.hpp"
#include "kfactor/matching.hpp"
#include "kfactor/tutte.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace kfactor;
using namespace kfactor::testing;

namespace {

using Clock = std::chrono::steady_clock;

// Collects failed sub-checks for one criterion.
class Criterion {
public:
  void expect(bool ok, const std::string &what) {
    if (!ok)
      failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string> &failures() const { return failures_; }

private:
  std::vector<std::string> failures_;
};

struct Deleted {
  Multigraph graph;
  VertexSet d;
  VertexSet s;
};

Deleted side_witness(const LabeledGraph &g, Vertex u) {
  const bool in_u = g.label("U").contains(u);
  const VertexSet &own = in_u ? g.label("U") : g.label("W");
  const VertexSet &other = in_u ? g.label("W") : g.label("U");
  const auto del = delete_vertices(g.graph, {u});
  return {del.graph, del.transport(own.without(u)), del.transport(other)};
}

std::string str(std::int64_t x) { return std::to_string(x); }

// 1. Sharp upper family, r = 3, m = 2, m* = 3.
void sharp_upper_family(Criterion &c) {
  const auto g = sharp_upper(3, 2);
  c.expect(g.graph.order() == 19, "order 19");
  c.expect(g.graph.is_regular(6), "6-regular");
  const auto cut = global_min_cut(g.graph);
  c.expect(cut.value == 4, "lambda = 4, got " + str(cut.value));

  for (Vertex v = 0; v < g.graph.order(); ++v) {
    const auto h = delete_vertices(g.graph, {v}).graph;
    const auto f = find_k_factor(h, 2);
    c.expect(f && verify_factor(h, 2, *f), "2-factor of G-" + str(v));
  }
  for (Vertex u : g.label("U").united(g.label("W"))) {
    const auto w = side_witness(g, u);
    c.expect(!find_k_factor(w.graph, 3), "no 3-factor of G-" + str(u));
    const auto r = deficiency(w.graph, w.d, w.s, 3);
    c.expect(r.delta == -2, "delta = -2 at u=" + str(u) + ", got " + str(r.delta));
    c.expect(r.q == 1, "q = 1 at u=" + str(u) + ", got " + str(r.q));
  }
}

// 2. Sharp lower family, r = 2.
void sharp_lower_family(Criterion &c) {
  const auto h = sharp_lower(2);
  c.expect(h.graph.order() == 17, "order 17");
  c.expect(h.graph.is_regular(4), "4-regular");
  const auto &m = h.label("M");
  const int odd = odd_component_count(delete_vertices(h.graph, m).graph);
  c.expect(odd == 3, "c_o(H - V(M)) = 3, got " + str(odd));
  for (Vertex v : m) {
    const auto del = delete_vertices(h.graph, {v});
    const auto def = one_factor_deficiency(del.graph, del.transport(m.without(v)));
    c.expect(def == 2, "one-factor deficiency 2 at v=" + str(v) + ", got " + str(def));
    c.expect(!find_k_factor(del.graph, 1), "no 1-factor of H-" + str(v));
  }
}

// 3. Condition-sharpness family, r = 6, m = 3, k = 3.
void sharp_condition_family(Criterion &c) {
  const auto g = sharp_condition(6, 3);
  c.expect(g.graph.order() == 49, "order 49");
  c.expect(g.graph.is_regular(12), "12-regular");
  const auto cut = global_min_cut(g.graph);
  c.expect(cut.value == 6, "lambda = 6, got " + str(cut.value));
  for (Vertex u : g.label("U")) {
    const auto w = side_witness(g, u);
    const auto r = deficiency(w.graph, w.d, w.s, 3);
    c.expect(r.q == 2, "q = 2 at u=" + str(u) + ", got " + str(r.q));
    c.expect(r.delta == -2, "delta = -2 at u=" + str(u) + ", got " + str(r.delta));
    c.expect(!find_k_factor(w.graph, 3), "no 3-factor of R-" + str(u));
  }
}

// 4. Randomized verification of both theorem conditions.
void randomized_theorem(Criterion &c) {
  struct Run {
    int r, m, k;
    std::uint64_t seed;
  };
  for (const Run run : {Run{3, 2, 2, 1}, Run{4, 3, 3, 2}}) {
    TheoremParams p;
    p.r = run.r;
    p.m = run.m;
    p.k = run.k;
    p.trials = 25;
    p.n_min = 11;
    p.n_max = 21;
    p.seed = run.seed;
    const auto report = verify_theorem(p);
    const std::string tag =
        "(r=" + str(run.r) + ", m=" + str(run.m) + ", k=" + str(run.k) + ")";
    c.expect(report.in_scope, tag + " in scope");
    c.expect(report.verdict == Verdict::Pass, tag + " verdict " + to_string(report.verdict));
    c.expect(report.trials.size() == 25, tag + " 25 trials");
    for (const auto &t : report.trials) {
      c.expect(t.generated && t.n % 2 == 1 && t.n >= 11 && t.n <= 21,
               tag + " trial " + str(t.index) + " generated with odd n in range");
      c.expect(t.lambda >= 2 * run.m, tag + " trial " + str(t.index) + " lambda");
      for (bool found : t.factor_found)
        c.expect(found, tag + " trial " + str(t.index) + " factor");
    }
  }
}

// 5. Oracle equivalences.
void oracle_equivalences(Criterion &c) {
  Rng rng(300);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + rng.below(10);
    const auto g = trial % 3 == 0 ? random_multigraph(rng, n, rng.below(2 * n + 1), false, true)
                                  : random_simple(rng, n, 15 + rng.below(50));
    c.expect(max_matching(g).size() == brute_force_max_matching(g).size(),
             "(a) matching size, trial " + str(trial));
  }

  Rng rng_b(100);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + rng_b.below(9);
    const auto g = random_multigraph(rng_b, n, rng_b.below(3 * n + 2), trial % 2 == 0, true);
    const int k = 1 + trial % 3;
    c.expect(find_k_factor(g, k).has_value() != find_witness(g, k).has_value(),
             "(b) factor/witness, trial " + str(trial));
  }

  int index = 0;
  for (const auto &g : small_fixtures()) {
    c.expect(global_min_cut(g).value == brute_force_min_cut(g), "(c) min cut, fixture " + str(index));
    ++index;
  }
}

// 6. delta = k n (mod 2).
void parity_invariant(Criterion &c) {
  Rng rng(1000);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + rng.below(12);
    const auto g = random_multigraph(rng, n, rng.below(4 * n + 1), true, true);
    const int k = 1 + rng.below(4);
    std::vector<Vertex> d, s;
    for (Vertex v = 0; v < n; ++v) {
      const int pick = rng.below(3);
      if (pick == 1)
        d.push_back(v);
      else if (pick == 2)
        s.push_back(v);
    }
    const auto r = deficiency(g, VertexSet(d), VertexSet(s), k);
    if ((r.delta - static_cast<std::int64_t>(k) * n) % 2 != 0)
      ++violations;
  }
  c.expect(violations == 0, str(violations) + " parity violations");
}

// 7. 4-regular 4-edge-connected odd graphs: g - u has 1- and 2-factors.
void four_regular_deleted_factors(Criterion &c) {
  for (int i = 0; i < 10; ++i) {
    GenSpec spec;
    spec.n = 7 + 2 * i;
    spec.d = 4;
    spec.lambda_min = 4;
    spec.seed = 700 + static_cast<std::uint64_t>(i);
    spec.max_tries = 5000;
    const auto res = random_regular_edge_connected(spec);
    c.expect(res.graph.has_value(), "graph " + str(i) + " generated");
    if (!res.graph)
      continue;
    const auto &g = *res.graph;
    c.expect(g.order() % 2 == 1 && g.is_regular(4) && is_k_edge_connected(g, 4),
             "graph " + str(i) + " hypotheses");
    for (int m = 1; m <= 2; ++m) {
      for (Vertex u = 0; u < g.order(); ++u) {
        const auto h = delete_vertices(g, {u}).graph;
        const auto f = find_k_factor(h, m);
        c.expect(f && verify_factor(h, m, *f),
                 "graph " + str(i) + " minus " + str(u) + " has a " + str(m) + "-factor");
      }
    }
  }
}

struct Entry {
  int id;
  const char *name;
  double limit_seconds;
  std::function<void(Criterion &)> run;
};

} // namespace

int main() {
  const std::vector<Entry> entries = {
      {1, "sharp upper family SharpUpper(3,2)", 30.0, sharp_upper_family},
      {2, "sharp lower family SharpLower(2)", 5.0, sharp_lower_family},
      {3, "condition-sharpness family SharpCondition(6,3)", 120.0, sharp_condition_family},
      {4, "randomized theorem verification (3,2,2) and (4,3,3)", 600.0, randomized_theorem},
      {5, "oracle equivalences (matching, factor/witness, min cut)", 600.0, oracle_equivalences},
      {6, "parity invariant on 1000 evaluations", 600.0, parity_invariant},
      {7, "vertex-deleted m-factors in 4-regular 4-edge-connected graphs", 60.0,
       four_regular_deleted_factors},
  };

  int failed = 0;
  for (const auto &e : entries) {
    Criterion c;
    const auto start = Clock::now();
    try {
      e.run(c);
    } catch (const std::exception &ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds >= e.limit_seconds) {
      std::ostringstream msg;
      msg << "runtime " << seconds << " s exceeds " << e.limit_seconds << " s";
      c.expect(false, msg.str());
    }
    std::printf("[%s] criterion %d: %s (%.3f s)\n", c.ok() ? "PASS" : "FAIL", e.id, e.name, seconds);
    for (std::size_t i = 0; i < c.failures().size() && i < 10; ++i)
      std::printf("       - %s\n", c.failures()[i].c_str());
    failed += c.ok() ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failed, entries.size());
  return failed == 0 ? 0 : 1;
}
