// kfactor: command-line front end for the k-factor toolkit.
//
// Exit codes: 0 success / PASS, 1 domain failure (no factor, no witness,
// invalid factor, FAIL or INCOMPLETE run), 2 usage or input error.

#include "kfactor/connectivity.hpp"
#include "kfactor/constructions.hpp"
#include "kfactor/error.hpp"
#include "kfactor/factor.hpp"
#include "kfactor/generators.hpp"
#include "kfactor/graph_io.hpp"
#include "kfactor/harness.hpp"
#include "kfactor/tutte.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace kfactor;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

LabeledGraph load(const std::string &path) {
  if (path == "-")
    return read_graph(std::cin);
  return read_graph_file(path);
}

void emit(const std::string &output, const LabeledGraph &g) {
  if (output.empty() || output == "-")
    std::cout << format_graph(g);
  else
    write_graph_file(output, g);
}

std::string join(const VertexSet &s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string hex(std::uint64_t x) {
  std::ostringstream s;
  s << std::hex << x;
  return s.str();
}

// Comma-separated vertex indices and @LABEL references.
VertexSet parse_vertex_list(const std::string &text, const LabeledGraph &g) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty())
      continue;
    if (token.front() == '@') {
      const auto &members = g.label(token.substr(1)).members();
      out.insert(out.end(), members.begin(), members.end());
      continue;
    }
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || v < 0 || v >= g.graph.order())
      throw GraphError("bad vertex '" + token + "' in list '" + text + "'");
    out.push_back(v);
  }
  return VertexSet(std::move(out));
}

// The graph after an optional single-vertex deletion, with labels carried over.
struct Working {
  LabeledGraph graph;
  std::optional<VertexDeletion> deletion;

  VertexSet transport(const VertexSet &s) const { return deletion ? deletion->transport(s) : s; }
};

Working apply_delete(LabeledGraph g, std::optional<int> vertex) {
  if (!vertex)
    return {std::move(g), std::nullopt};
  if (*vertex < 0 || *vertex >= g.graph.order())
    throw GraphError("--delete vertex " + std::to_string(*vertex) + " out of range");
  auto del = delete_vertices(g.graph, {*vertex});
  LabeledGraph out{del.graph, {}};
  for (const auto &[name, set] : g.labels)
    out.labels[name] = del.transport(set);
  return {std::move(out), std::move(del)};
}

void print_deletion_header(const Working &w, int vertex) {
  std::cout << "# deleted " << vertex << "; original index of each vertex:";
  for (Vertex v : w.deletion->new_to_old)
    std::cout << ' ' << v;
  std::cout << '\n';
}

void print_report(const DeficiencyReport &r) {
  std::cout << "k=" << r.k << '\n';
  std::cout << "D=" << join(r.d) << '\n';
  std::cout << "S=" << join(r.s) << '\n';
  std::cout << "delta=" << r.delta << '\n';
  std::cout << "q=" << r.q << '\n';
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto &c = r.components[i];
    std::cout << "component " << i << " size=" << c.block.size() << " e_to_s=" << c.edges_to_s
              << " k_size=" << c.k_size << " parity=" << (c.k_odd ? "odd" : "even")
              << " members=" << join(c.block) << '\n';
  }
}

std::string scope_text(bool in_scope) { return in_scope ? "in" : "OUT OF THEOREM SCOPE"; }

void print_run_text(const TheoremRunReport &report) {
  const auto &p = report.params;
  std::cout << "verify-theorem r=" << p.r << " m=" << p.m << " k=" << p.k << " trials=" << p.trials
            << " n=" << p.n_min << ".." << p.n_max << " seed=" << p.seed << '\n';
  std::cout << "scope=" << scope_text(report.in_scope) << '\n';
  for (const auto &t : report.trials) {
    std::cout << "trial " << t.index << " n=" << t.n;
    if (!t.generated) {
      std::cout << " attempts=" << t.attempts << " generated=no\n";
      continue;
    }
    std::size_t found = 0;
    for (bool b : t.factor_found)
      found += b ? 1 : 0;
    std::cout << " attempts=" << t.attempts << " graph_seed=" << t.graph_seed
              << " hash=" << hex(t.graph_hash) << " lambda=" << t.lambda
              << " factors=" << found << "/" << t.factor_found.size()
              << " failing=" << (t.failing.empty() ? "-" : join(VertexSet(t.failing)));
    if (!t.dump_path.empty())
      std::cout << " dump=" << t.dump_path;
    std::cout << '\n';
  }
  std::cout << "verdict=" << to_string(report.verdict) << '\n';
}

nlohmann::json run_to_json(const TheoremRunReport &report) {
  const auto &p = report.params;
  nlohmann::json trials = nlohmann::json::array();
  for (const auto &t : report.trials) {
    trials.push_back({{"index", t.index},
                      {"n", t.n},
                      {"trial_seed", t.trial_seed},
                      {"graph_seed", t.graph_seed},
                      {"attempts", t.attempts},
                      {"generated", t.generated},
                      {"graph_hash", hex(t.graph_hash)},
                      {"lambda", t.lambda},
                      {"factor_found", t.factor_found},
                      {"failing", t.failing},
                      {"dump_path", t.dump_path}});
  }
  return {{"params",
           {{"r", p.r},
            {"m", p.m},
            {"k", p.k},
            {"trials", p.trials},
            {"n_min", p.n_min},
            {"n_max", p.n_max},
            {"seed", p.seed},
            {"max_tries", p.max_tries}}},
          {"in_scope", report.in_scope},
          {"scope", scope_text(report.in_scope)},
          {"trials", trials},
          {"verdict", to_string(report.verdict)}};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"k-factors in vertex-deleted subgraphs of regular multigraphs"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // gen regular
  auto *gen = app.add_subcommand("gen", "generate random graphs");
  gen->require_subcommand(1);
  auto *gen_regular = gen->add_subcommand("regular", "random 2r-regular edge-connected multigraph");
  GenSpec spec;
  std::string gen_out;
  gen_regular->add_option("--n", spec.n, "vertex count (odd)")->required();
  gen_regular->add_option("--d", spec.d, "degree (even)")->required();
  gen_regular->add_option("--lambda", spec.lambda_min, "required edge connectivity")->required();
  gen_regular->add_option("--seed", spec.seed, "64-bit seed")->required();
  gen_regular->add_option("--max-tries", spec.max_tries, "sampling budget")->capture_default_str();
  gen_regular->add_flag("--simple", spec.simple, "reject loops and parallel edges");
  gen_regular->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen_regular->callback([&] {
    const auto res = random_regular_edge_connected(spec);
    if (!res.graph) {
      std::cerr << "FAILED attempts=" << res.attempts << '\n';
      exit_code = kExitDomain;
      return;
    }
    emit(gen_out, LabeledGraph{*res.graph, {}});
    std::cerr << "attempts=" << res.attempts << " graph_seed=" << res.used_seed << '\n';
  });

  // construct
  auto *construct = app.add_subcommand("construct", "build the extremal graph families");
  construct->require_subcommand(1);
  int r = 0;
  int m = 0;
  std::string construct_out;
  auto *c_upper = construct->add_subcommand("sharp-upper", "K_{2r+1} and K_{2r,2r} minus m-matchings, joined");
  c_upper->add_option("--r", r)->required();
  c_upper->add_option("--m", m)->required();
  c_upper->add_option("-o,--output", construct_out);
  c_upper->callback([&] { emit(construct_out, sharp_upper(r, m)); });
  auto *c_lower = construct->add_subcommand("sharp-lower", "2r-1 clique copies hung on an (r-1)-matching");
  c_lower->add_option("--r", r)->required();
  c_lower->add_option("-o,--output", construct_out);
  c_lower->callback([&] { emit(construct_out, sharp_lower(r)); });
  auto *c_cond = construct->add_subcommand("sharp-cond", "K_{2r,2r-1} with two clique copies, 2m <= r");
  c_cond->add_option("--r", r)->required();
  c_cond->add_option("--m", m)->required();
  c_cond->add_option("-o,--output", construct_out);
  c_cond->callback([&] { emit(construct_out, sharp_condition(r, m)); });

  // factor
  auto *factor = app.add_subcommand("factor", "find or check k-factors");
  factor->require_subcommand(1);
  int k = 0;
  std::optional<int> delete_vertex;
  std::string graph_path;
  std::string factor_path;
  auto *f_find = factor->add_subcommand("find", "print a k-factor or NONE");
  f_find->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  f_find->add_option("--delete", delete_vertex, "delete this vertex first");
  f_find->add_option("graph", graph_path)->required();
  f_find->callback([&] {
    const Working w = apply_delete(load(graph_path), delete_vertex);
    const auto f = find_k_factor(w.graph.graph, k);
    if (!f || !verify_factor(w.graph.graph, k, *f)) {
      std::cout << "NONE\n";
      exit_code = kExitDomain;
      return;
    }
    if (w.deletion)
      print_deletion_header(w, *delete_vertex);
    std::cout << format_graph(f->as_graph(w.graph.graph));
  });
  auto *f_check = factor->add_subcommand("check", "exit 0 iff the second graph is a k-factor of the first");
  f_check->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  f_check->add_option("graph", graph_path)->required();
  f_check->add_option("factor", factor_path)->required();
  f_check->callback([&] {
    const auto host = load(graph_path).graph;
    const auto sub = load(factor_path).graph;
    const auto f = factor_from_subgraph(host, k, sub);
    const bool ok = f && verify_factor(host, k, *f);
    std::cout << (ok ? "VALID" : "INVALID") << '\n';
    exit_code = ok ? kExitOk : kExitDomain;
  });

  // tutte
  auto *tutte = app.add_subcommand("tutte", "deficiency certificates");
  tutte->require_subcommand(1);
  std::string d_list;
  std::string s_list;
  int guard = kDefaultWitnessGuard;
  auto *t_def = tutte->add_subcommand("deficiency", "evaluate delta(D, S) for k");
  t_def->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  t_def->add_option("--d", d_list, "comma list of vertices or @LABEL (original indices)");
  t_def->add_option("--s", s_list, "comma list of vertices or @LABEL (original indices)");
  t_def->add_option("--delete", delete_vertex, "evaluate on the graph minus this vertex");
  t_def->add_option("graph", graph_path)->required();
  t_def->callback([&] {
    const auto original = load(graph_path);
    const VertexSet d = parse_vertex_list(d_list, original);
    const VertexSet s = parse_vertex_list(s_list, original);
    const Working w = apply_delete(original, delete_vertex);
    if (w.deletion)
      print_deletion_header(w, *delete_vertex);
    print_report(deficiency(w.graph.graph, w.transport(d), w.transport(s), k));
  });
  auto *t_wit = tutte->add_subcommand("witness", "exhaustive search for a negative (D, S)");
  t_wit->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  t_wit->add_option("--guard", guard, "maximum vertex count")->capture_default_str();
  t_wit->add_option("--delete", delete_vertex, "search on the graph minus this vertex");
  t_wit->add_option("graph", graph_path)->required();
  t_wit->callback([&] {
    const Working w = apply_delete(load(graph_path), delete_vertex);
    const auto witness = find_witness(w.graph.graph, k, guard);
    if (!witness) {
      std::cout << "NONE\n";
      exit_code = kExitDomain;
      return;
    }
    if (w.deletion)
      print_deletion_header(w, *delete_vertex);
    print_report(witness->report);
  });

  // connectivity
  auto *conn = app.add_subcommand("connectivity", "global edge connectivity");
  conn->add_option("graph", graph_path)->required();
  conn->callback([&] {
    const auto cut = global_min_cut(load(graph_path).graph);
    std::cout << "lambda=" << cut.value << '\n';
    std::cout << "l side " << join(cut.side) << '\n';
  });

  // verify-theorem
  auto *verify = app.add_subcommand("verify-theorem", "check g - v for k-factors on random inputs");
  TheoremParams params;
  params.trials = 25;
  params.n_min = 11;
  params.n_max = 21;
  params.seed = 1;
  std::string dump_dir;
  std::string input_graph;
  bool as_json = false;
  verify->add_option("--r", params.r, "degree is 2r")->required();
  verify->add_option("--m", params.m, "edge connectivity is at least 2m")->required();
  verify->add_option("--k", params.k, "factor degree")->required();
  verify->add_option("--trials", params.trials)->capture_default_str();
  verify->add_option("--n-min", params.n_min)->capture_default_str();
  verify->add_option("--n-max", params.n_max)->capture_default_str();
  verify->add_option("--seed", params.seed)->capture_default_str();
  verify->add_option("--max-tries", params.max_tries, "generator budget per trial")->capture_default_str();
  verify->add_option("--dump-dir", dump_dir, "where to write counter-examples");
  verify->add_option("--graph", input_graph, "check this graph instead of generating");
  verify->add_flag("--json", as_json, "machine-readable report");
  verify->callback([&] {
    std::optional<std::filesystem::path> dump;
    if (!dump_dir.empty())
      dump = dump_dir;
    params.dump_dir = dump;
    const TheoremRunReport report =
        input_graph.empty()
            ? verify_theorem(params)
            : verify_theorem_on_graph(load(input_graph).graph, params.r, params.m, params.k, dump);
    if (as_json)
      std::cout << run_to_json(report).dump(2) << '\n';
    else
      print_run_text(report);
    exit_code = report.verdict == Verdict::Pass ? kExitOk : kExitDomain;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  } catch (const kfactor::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}
