#include "kfactor/harness.hpp"

#include "kfactor/connectivity.hpp"
#include "kfactor/error.hpp"
#include "kfactor/factor.hpp"
#include "kfactor/generators.hpp"
#include "kfactor/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace kfactor {
namespace {

std::string dump_counterexample(const std::filesystem::path &dir, const Multigraph &g,
                                const TrialRecord &trial, const std::string &lineage) {
  std::filesystem::create_directories(dir);
  std::ostringstream name;
  name << "counterexample-trial" << trial.index << "-" << std::hex << trial.graph_hash << ".txt";
  const auto path = dir / name.str();

  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write " + path.string());
  out << "# " << lineage << "\n";
  out << "# k-factor missing in g - v for the vertices labelled FAILING\n";
  out << format_graph(LabeledGraph{g, {{"FAILING", VertexSet(trial.failing)}}});
  return path.string();
}

std::vector<int> odd_orders(int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n)
    if (n % 2 != 0 && n > 0)
      out.push_back(n);
  return out;
}

Verdict overall(const std::vector<TrialRecord> &trials) {
  bool incomplete = false;
  for (const auto &t : trials) {
    if (!t.failing.empty())
      return Verdict::Fail;
    incomplete = incomplete || !t.generated;
  }
  return incomplete ? Verdict::Incomplete : Verdict::Pass;
}

} // namespace

bool in_theorem_scope(int r, int m, int k) {
  if (!(2 <= m && m < r))
    return false;
  if (k % 2 == 0)
    return 2 <= k && k <= m;
  return 3 <= k && k <= m && 2 * m > r;
}

const char *to_string(Verdict v) noexcept {
  switch (v) {
  case Verdict::Pass:
    return "PASS";
  case Verdict::Fail:
    return "FAIL";
  case Verdict::Incomplete:
    return "INCOMPLETE";
  }
  return "?";
}

TrialRecord check_vertex_deleted_factors(const Multigraph &g, int k) {
  TrialRecord t;
  t.n = g.order();
  t.generated = true;
  t.graph_hash = g.fingerprint();
  t.lambda = g.order() >= 2 ? global_min_cut(g).value : 0;
  t.factor_found.assign(static_cast<std::size_t>(g.order()), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    const Multigraph h = delete_vertices(g, {v}).graph;
    const auto f = find_k_factor(h, k);
    const bool ok = f && verify_factor(h, k, *f);
    t.factor_found[v] = ok;
    if (!ok)
      t.failing.push_back(v);
  }
  return t;
}

TheoremRunReport verify_theorem(const TheoremParams &params) {
  const auto orders = odd_orders(params.n_min, params.n_max);
  if (orders.empty())
    throw GraphError("order range [" + std::to_string(params.n_min) + ", " +
                     std::to_string(params.n_max) + "] contains no odd value");
  if (params.r < 1 || params.m < 1 || params.k < 1 || params.trials < 0)
    throw GraphError("r, m and k must be positive and trials non-negative");

  TheoremRunReport report;
  report.params = params;
  report.in_scope = in_theorem_scope(params.r, params.m, params.k);

  const int d = 2 * params.r;
  const int lambda_min = 2 * params.m;
  for (int i = 0; i < params.trials; ++i) {
    TrialRecord t;
    t.index = i;
    t.n = orders[static_cast<std::size_t>(i) % orders.size()];
    t.trial_seed = derive_seed(params.seed, static_cast<std::uint64_t>(i));

    GenSpec spec{t.n, d, lambda_min, t.trial_seed, params.max_tries, false};
    std::optional<Multigraph> g;
    int attempts = 0;
    // Re-validate the hypotheses independently of the generator's filter;
    // a rejected sample resumes sampling after the rejected attempt.
    while (attempts < params.max_tries) {
      spec.max_tries = params.max_tries - attempts;
      GenResult res = random_regular_edge_connected(spec);
      attempts += res.attempts;
      if (!res.graph)
        break;
      const Multigraph &cand = *res.graph;
      const bool valid = cand.order() % 2 == 1 && cand.is_regular(d) &&
                         global_min_cut(cand).value >= lambda_min;
      if (valid) {
        g = std::move(res.graph);
        t.graph_seed = res.used_seed;
        break;
      }
      spec.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(attempts));
    }
    t.attempts = attempts;

    if (g) {
      TrialRecord checked = check_vertex_deleted_factors(*g, params.k);
      checked.index = t.index;
      checked.trial_seed = t.trial_seed;
      checked.graph_seed = t.graph_seed;
      checked.attempts = t.attempts;
      t = std::move(checked);
      if (!t.failing.empty() && params.dump_dir) {
        std::ostringstream lineage;
        lineage << "r=" << params.r << " m=" << params.m << " k=" << params.k
                << " run_seed=" << params.seed << " trial=" << t.index
                << " trial_seed=" << t.trial_seed << " graph_seed=" << t.graph_seed;
        t.dump_path = dump_counterexample(*params.dump_dir, *g, t, lineage.str());
      }
    }
    report.trials.push_back(std::move(t));
  }
  report.verdict = overall(report.trials);
  return report;
}

TheoremRunReport verify_theorem_on_graph(const Multigraph &g, int r, int m, int k,
                                         const std::optional<std::filesystem::path> &dump_dir) {
  TheoremRunReport report;
  report.params.r = r;
  report.params.m = m;
  report.params.k = k;
  report.params.trials = 1;
  report.params.n_min = report.params.n_max = g.order();
  report.params.dump_dir = dump_dir;
  // Supplied graphs are checked as given, so the hypotheses are part of scope.
  report.in_scope = in_theorem_scope(r, m, k) && g.order() % 2 == 1 && g.is_regular(2 * r) &&
                    is_k_edge_connected(g, 2 * m);

  TrialRecord t = check_vertex_deleted_factors(g, k);
  if (!t.failing.empty() && dump_dir)
    t.dump_path = dump_counterexample(*dump_dir, g, t,
                                      "supplied graph r=" + std::to_string(r) +
                                          " m=" + std::to_string(m) + " k=" + std::to_string(k));
  report.trials.push_back(std::move(t));
  report.verdict = overall(report.trials);
  return report;
}

} // namespace kfactor
