// tricover command-line driver: generation, solving, constructions,
// verification suites and parameter sweeps. Reports are JSON (CSV for
// sweeps) with sorted keys and 12-significant-digit reals.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tricover/certificates.hpp"
#include "tricover/constructions.hpp"
#include "tricover/errors.hpp"
#include "tricover/generators.hpp"
#include "tricover/graph6.hpp"
#include "tricover/oracle.hpp"
#include "tricover/report.hpp"
#include "tricover/solvers.hpp"
#include "tricover/trifree_search.hpp"
#include "tricover/verify.hpp"

namespace {

using namespace tricover;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInexact = 3;

struct Shared {
  std::uint64_t budget_nodes = 0;
  double budget_secs = 0.0;
  std::uint64_t seed = 1;
  std::string out;
  unsigned parallel = 1;
  bool timings = false;

  Budget budget() const { return {budget_nodes, budget_secs}; }
  ReportOptions report() const { return {timings}; }
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

std::vector<Graph> read_graphs(const std::string& path) {
  if (path.empty() || path == "-") return graph6::read_all(std::cin);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read '" + path + "'");
  return graph6::read_all(f);
}

// Every long option of the subcommand chain with its effective value.
Json config_of(const CLI::App* app) {
  Json cfg = Json::object();
  for (const CLI::App* a = app; a != nullptr; a = a->get_parent()) {
    for (const CLI::Option* opt : a->get_options()) {
      const std::string name = opt->get_lnames().empty() ? "" : opt->get_lnames().front();
      // Output destinations and meta flags are not part of the computation.
      if (name.empty() || name == "help" || name == "version" || name == "out" || name == "graph-out" ||
          cfg.contains(name))
        continue;
      const bool flag = opt->get_expected_max() == 0;
      if (opt->count() > 0) {
        const auto& res = opt->results();
        if (flag)
          cfg[name] = true;
        else if (res.size() == 1)
          cfg[name] = res.front();
        else
          cfg[name] = res;
      } else if (flag) {
        cfg[name] = false;
      } else {
        cfg[name] = opt->get_default_str();
      }
    }
  }
  return cfg;
}

std::string command_path(const CLI::App* app) {
  std::string path;
  for (const CLI::App* a = app; a != nullptr && a->get_parent() != nullptr; a = a->get_parent())
    path = a->get_name() + (path.empty() ? "" : " " + path);
  return path;
}

Json header(const CLI::App* app) {
  return {{"tool", "tricover"}, {"version", std::string(kVersion)}, {"command", command_path(app)},
          {"config", config_of(app)}};
}

double parse_d(const std::string& token) {
  if (token == "min-ratio" || token == "sum-ratio") return optimal_d(parse_objective(token)).d;
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) throw ParameterError("bad d value '" + token + "'");
  return d;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

// Runs job(i) for i in [0, count) on up to `threads` workers.
template <typename Job>
void run_indexed(std::size_t count, unsigned threads, Job job) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_lock;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_lock);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// ---- gen ----

struct GenArgs {
  std::string kind = "gnp";
  std::size_t n = 0;
  std::optional<double> p;
  double theta = 0.75;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t effort = kDefaultNorinEffort;
  std::size_t count = 1;
};

Graph generate(const GenArgs& g, std::uint64_t seed) {
  if (g.kind == "gnp") return gnp(g.n, g.p ? *g.p : std::pow(static_cast<double>(g.n), -g.theta), seed);
  if (g.kind == "complete") return complete_graph(g.n);
  if (g.kind == "empty") return empty_graph(g.n);
  if (g.kind == "cycle") return cycle_graph(g.n);
  if (g.kind == "path") return path_graph(g.n);
  if (g.kind == "bipartite") return complete_bipartite(g.a, g.b);
  if (g.kind == "trifree") {
    ConstructionParams params;
    params.n = g.n;
    params.theta = g.theta;
    params.seed = seed;
    params.p_override = g.p;
    return sample_trifree(params, Budget::nodes(200000)).first;
  }
  if (g.kind == "lowalpha") return low_alpha_trifree(g.n, g.effort, seed, Budget::nodes(1)).graph;
  throw ParameterError("unknown graph kind '" + g.kind + "'");
}

int run_gen(const GenArgs& args, const Shared& shared) {
  std::string text;
  for (std::size_t i = 0; i < args.count; ++i)
    text += graph6::encode(generate(args, i == 0 ? shared.seed : derive_seed(shared.seed, i))) + "\n";
  write_text(shared.out, text);
  return kExitOk;
}

// ---- solve ----

struct SolveArgs {
  std::string problem = "tau";
  std::string in;
  double k = 1.0;
  bool oracle = false;
  std::uint64_t oracle_limit = std::uint64_t{1} << 26;
  bool require_optimal = false;
};

int run_solve(const SolveArgs& args, const Shared& shared, const CLI::App* app) {
  const Problem problem = parse_problem(args.problem);
  const std::vector<Graph> graphs = read_graphs(args.in);
  std::vector<Json> results(graphs.size());
  std::atomic<bool> inexact{false};
  run_indexed(graphs.size(), shared.parallel, [&](std::size_t i) {
    const Graph& g = graphs[i];
    SolveOutcome out;
    if (args.oracle) {
      out = oracle_bruteforce(problem, g, args.oracle_limit, args.k);
    } else {
      switch (problem) {
        case Problem::tau: out = tau_exact(g, shared.budget()); break;
        case Problem::alpha1: out = alpha1_exact(g, shared.budget()); break;
        case Problem::alpha: out = alpha_exact(g, shared.budget()); break;
        case Problem::phi: out = phi_max(g, args.k, shared.budget()); break;
      }
    }
    if (!out.optimal()) inexact = true;
    Json j = to_json(out, shared.report());
    j["graph6"] = graph6::encode(g);
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["method"] = args.oracle ? "oracle" : "branch-and-bound";
    j["certificate_valid"] = certificate_valid(g, out);
    results[i] = std::move(j);
  });
  Json doc = header(app);
  doc["results"] = results;
  write_text(shared.out, dump(doc) + "\n");
  return args.require_optimal && inexact ? kExitInexact : kExitOk;
}

// ---- construct ----

struct EgtArgs {
  std::size_t n = 64;
  double theta = 0.75;
  std::string d = "min-ratio";
  double eps = 0.5;
  std::optional<double> p;
  double c = 1.5;
  bool exact_alpha1 = false;
  std::string graph_out;
  bool require_optimal = false;
};

ConstructionParams make_params(std::size_t n, double theta, double d, double eps, std::uint64_t seed,
                               std::optional<double> p) {
  ConstructionParams params;
  params.n = n;
  params.theta = theta;
  params.d = d;
  params.eps = eps;
  params.seed = seed;
  params.p_override = p;
  params.validate();
  return params;
}

int run_egt(const EgtArgs& args, const Shared& shared, const CLI::App* app) {
  const ConstructionParams params = make_params(args.n, args.theta, parse_d(args.d), args.eps, shared.seed, args.p);
  const RatioReport r = egt_ratio_pipeline(params, args.c, shared.budget(), {args.exact_alpha1, 2000});
  Json doc = header(app);
  doc["report"] = to_json(r, shared.report());
  write_text(shared.out, dump(doc) + "\n");
  if (!args.graph_out.empty()) {
    std::string text = graph6::encode(r.g) + "\n";
    if (!r.skipped) text += graph6::encode(build_join_H(r.g, r.k_int)) + "\n";
    write_text(args.graph_out, text);
  }
  const bool inexact = !r.trifree.phi.optimal() || (!r.skipped && !r.tau.optimal());
  return args.require_optimal && inexact ? kExitInexact : kExitOk;
}

struct NorinArgs {
  std::size_t n = 100;
  std::size_t effort = kDefaultNorinEffort;
  std::string c = "3/2";
  std::string in;
  std::string graph_out;
  bool require_optimal = false;
};

int run_norin(const NorinArgs& args, const Shared& shared, const CLI::App* app) {
  const Rational c = Rational::parse(args.c);
  Json doc = header(app);
  NorinReport report;
  Graph h;
  if (!args.in.empty()) {
    const auto graphs = read_graphs(args.in);
    if (graphs.size() != 1) throw ParameterError("construct norin: --in must hold exactly one graph");
    h = graphs.front();
    report = norin_check(h, c, shared.budget());
  } else {
    NorinRun run = norin_construct(args.n, args.effort, shared.seed, c, shared.budget());
    h = run.search.graph;
    report = run.report;
    doc["search"] = {{"accepted", run.search.accepted}, {"surrogate", run.search.surrogate}};
  }
  doc["report"] = to_json(report, shared.report());
  doc["h_graph6"] = graph6::encode(h);
  write_text(shared.out, dump(doc) + "\n");
  if (!args.graph_out.empty()) write_text(args.graph_out, graph6::encode(h) + "\n");
  const bool inexact = !report.alpha.optimal() || !report.tau.optimal();
  return args.require_optimal && inexact ? kExitInexact : kExitOk;
}

// ---- verify ----

int finish_checks(const std::vector<CheckReport>& checks, const Shared& shared, const CLI::App* app) {
  Json doc = header(app);
  Json list = Json::array();
  std::size_t pass = 0, fail = 0, undecided = 0;
  for (const auto& c : checks) {
    list.push_back(to_json(c));
    if (c.verdict == Verdict::pass) ++pass;
    if (c.verdict == Verdict::fail) ++fail;
    if (c.verdict == Verdict::indeterminate) ++undecided;
  }
  doc["checks"] = list;
  doc["summary"] = {{"pass", pass}, {"fail", fail}, {"indeterminate", undecided}};
  write_text(shared.out, dump(doc) + "\n");
  return fail > 0 ? kExitCheckFailed : kExitOk;
}

struct SuiteArgs {
  std::string in;
  std::size_t random = 0;
  std::size_t n_max = 9;
};

int run_suite(const SuiteArgs& args, const Shared& shared, const CLI::App* app) {
  std::vector<Graph> graphs;
  if (!args.in.empty()) graphs = read_graphs(args.in);
  Rng rng(shared.seed);
  for (std::size_t i = 0; i < args.random; ++i) {
    const auto n = static_cast<std::size_t>(1 + rng.below(args.n_max));
    const double p = rng.uniform01();
    graphs.push_back(gnp(n, p, rng.next()));
  }
  if (graphs.empty()) throw ParameterError("verify suite: give --in or --random");
  std::vector<CheckReport> checks(graphs.size());
  run_indexed(graphs.size(), shared.parallel,
              [&](std::size_t i) { checks[i] = inequality_suite(graphs[i], shared.budget()); });
  return finish_checks(checks, shared, app);
}

struct TritauArgs {
  std::size_t exhaustive_n = 5;
  std::vector<std::size_t> k{1, 2, 3};
  std::size_t samples = 0;
};

int run_tritau(const TritauArgs& args, const Shared& shared, const CLI::App* app) {
  TritauOptions opt;
  opt.n_max = args.exhaustive_n;
  opt.k_set = args.k;
  opt.samples = args.samples;
  opt.seed = shared.seed;
  return finish_checks({tritau_exhaustive(opt, shared.budget())}, shared, app);
}

struct TightnessArgs {
  std::vector<std::size_t> n{4, 6, 8, 10};
  std::size_t s = 8;
  std::size_t t = 3;
};

int run_tightness(const TightnessArgs& args, const Shared& shared, const CLI::App* app) {
  std::vector<CheckReport> checks(args.n.size());
  run_indexed(args.n.size(), shared.parallel,
              [&](std::size_t i) { checks[i] = tightness_and_baselines(args.n[i], args.s, args.t, shared.budget()); });
  return finish_checks(checks, shared, app);
}

// Graph source shared by density and phibound: a file, or a sampled graph.
struct SampleArgs {
  std::string in;
  std::size_t n = 128;
  double theta = 0.75;
  std::optional<double> p;
  double eps = 0.5;
  std::size_t seeds = 1;
  bool clean = false;  // remove a triangle cover first
};

double sample_p(const SampleArgs& a, std::size_t n) {
  return a.p ? *a.p : std::pow(static_cast<double>(n), -a.theta);
}

std::vector<std::pair<Graph, double>> sample_graphs(const SampleArgs& a, const Shared& shared) {
  std::vector<std::pair<Graph, double>> out;
  if (!a.in.empty()) {
    for (Graph& g : read_graphs(a.in)) {
      const double p = sample_p(a, g.order());
      out.emplace_back(std::move(g), p);
    }
    return out;
  }
  for (std::size_t i = 0; i < a.seeds; ++i) {
    const std::uint64_t seed = shared.seed + i;
    const double p = sample_p(a, a.n);
    if (a.clean) {
      ConstructionParams params = make_params(a.n, a.theta, 1.0, a.eps, seed, a.p);
      out.emplace_back(sample_trifree(params, Budget::nodes(1)).first, p);
    } else {
      out.emplace_back(gnp(a.n, p, seed), p);
    }
  }
  return out;
}

int run_density(const SampleArgs& args, std::size_t effort, const Shared& shared, const CLI::App* app) {
  const auto graphs = sample_graphs(args, shared);
  std::vector<CheckReport> checks(graphs.size());
  run_indexed(graphs.size(), shared.parallel, [&](std::size_t i) {
    checks[i] = density_falsifier(graphs[i].first, graphs[i].second, args.eps, effort, derive_seed(shared.seed, i));
  });
  return finish_checks(checks, shared, app);
}

int run_phibound(const SampleArgs& args, const std::string& d, const Shared& shared, const CLI::App* app) {
  const auto graphs = sample_graphs(args, shared);
  const double dv = parse_d(d);
  std::vector<CheckReport> checks(graphs.size());
  run_indexed(graphs.size(), shared.parallel, [&](std::size_t i) {
    checks[i] = phi_bound_check(graphs[i].first, graphs[i].second, dv, args.eps, shared.budget());
  });
  return finish_checks(checks, shared, app);
}

// ---- sweep ----

struct SweepArgs {
  std::string n = "64";
  std::string d = "min-ratio";
  std::string eps = "0.5";
  std::string seeds;
  std::size_t seed_count = 3;
  double theta = 0.75;
  double c = 1.5;
};

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + "\n";
}

int run_sweep(const SweepArgs& args, const Shared& shared, const CLI::App* app) {
  std::vector<std::size_t> ns;
  for (const auto& s : split(args.n)) ns.push_back(static_cast<std::size_t>(std::stoull(s)));
  std::vector<double> ds;
  for (const auto& s : split(args.d)) ds.push_back(parse_d(s));
  std::vector<double> epss;
  for (const auto& s : split(args.eps)) epss.push_back(std::stod(s));
  std::vector<std::uint64_t> seeds;
  if (!args.seeds.empty()) {
    for (const auto& s : split(args.seeds)) seeds.push_back(std::stoull(s));
  } else {
    for (std::size_t i = 0; i < args.seed_count; ++i) seeds.push_back(shared.seed + i);
  }
  if (ns.empty() || ds.empty() || epss.empty() || seeds.empty()) throw ParameterError("sweep: empty grid");

  std::vector<ConstructionParams> grid;
  for (auto n : ns)
    for (auto d : ds)
      for (auto e : epss)
        for (auto s : seeds) grid.push_back(make_params(n, args.theta, d, e, s, std::nullopt));

  std::vector<std::vector<std::string>> rows(grid.size());
  run_indexed(grid.size(), shared.parallel, [&](std::size_t i) {
    rows[i] = ratio_csv_row(egt_ratio_pipeline(grid[i], args.c, shared.budget()));
  });

  const Json head = header(app);
  std::string text = "# " + dump(head, -1) + "\n";
  text += csv_line(ratio_csv_columns());
  for (const auto& row : rows) text += csv_line(row);
  write_text(shared.out, text);
  if (!shared.out.empty() && shared.out != "-") {
    Json side = head;
    side["rows"] = rows.size();
    side["columns"] = ratio_csv_columns();
    write_text(shared.out + ".json", dump(side) + "\n");
  }
  return kExitOk;
}

void add_shared(CLI::App* app, Shared& s) {
  app->add_option("--budget-nodes", s.budget_nodes, "Node limit per solve (0 = none)")->capture_default_str();
  app->add_option("--budget-secs", s.budget_secs, "Time limit per solve in seconds (0 = none)")->capture_default_str();
  app->add_option("--seed", s.seed, "Base seed")->capture_default_str();
  app->add_option("--out", s.out, "Output path (default stdout)");
  app->add_option("--parallel", s.parallel, "Worker threads across independent instances")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_flag("--timings", s.timings, "Include wall-clock seconds (not reproducible)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle cover and triangle-independent edge set toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Shared shared;
  add_shared(&app, shared);
  app.fallthrough();

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Write graphs in graph6");
  cmd_gen->add_option("--kind", gen.kind, "gnp|complete|empty|cycle|path|bipartite|trifree|lowalpha")
      ->capture_default_str();
  cmd_gen->add_option("--n", gen.n, "Order");
  cmd_gen->add_option("--p", gen.p, "Edge probability (default n^-theta)");
  cmd_gen->add_option("--theta", gen.theta, "Density exponent")->capture_default_str();
  cmd_gen->add_option("--a", gen.a, "First side (bipartite)");
  cmd_gen->add_option("--b", gen.b, "Second side (bipartite)");
  cmd_gen->add_option("--effort", gen.effort, "Local-search rounds (lowalpha)")->capture_default_str();
  cmd_gen->add_option("--count", gen.count, "Number of graphs")->capture_default_str();

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Solve tau, alpha1, alpha or phi");
  cmd_solve->add_option("--problem", solve.problem, "tau|alpha1|alpha|phi")->capture_default_str();
  cmd_solve->add_option("--in", solve.in, "graph6 input (default stdin)");
  cmd_solve->add_option("--k", solve.k, "k for phi")->capture_default_str();
  cmd_solve->add_flag("--oracle", solve.oracle, "Use the brute-force oracle");
  cmd_solve->add_option("--oracle-limit", solve.oracle_limit, "Largest subset count the oracle enumerates")
      ->capture_default_str();
  cmd_solve->add_flag("--require-optimal", solve.require_optimal, "Exit 3 if any solve is only bounded");

  auto* cmd_construct = app.add_subcommand("construct", "Build extremal constructions");
  cmd_construct->require_subcommand(1);
  EgtArgs egt;
  auto* cmd_egt = cmd_construct->add_subcommand("egt", "Sparse random graph joined with hubs");
  cmd_egt->add_option("--n", egt.n, "Order of G")->capture_default_str();
  cmd_egt->add_option("--theta", egt.theta, "p = n^-theta")->capture_default_str();
  cmd_egt->add_option("--d", egt.d, "d, or min-ratio / sum-ratio")->capture_default_str();
  cmd_egt->add_option("--eps", egt.eps, "epsilon")->capture_default_str();
  cmd_egt->add_option("--p", egt.p, "Override p");
  cmd_egt->add_option("--c", egt.c, "c for the margin alpha1 + c tau - |E|")->capture_default_str();
  cmd_egt->add_flag("--exact-alpha1", egt.exact_alpha1, "Also solve alpha1(H) when small enough");
  cmd_egt->add_option("--graph-out", egt.graph_out, "Write G and H as graph6");
  cmd_egt->add_flag("--require-optimal", egt.require_optimal, "Exit 3 if a solve is only bounded");

  NorinArgs norin;
  auto* cmd_norin = cmd_construct->add_subcommand("norin", "Hub joined to a low-alpha triangle-free graph");
  cmd_norin->add_option("--n", norin.n, "Order of H")->capture_default_str();
  cmd_norin->add_option("--effort", norin.effort, "Local-search rounds")->capture_default_str();
  cmd_norin->add_option("--c", norin.c, "c > 1 as a fraction or decimal")->capture_default_str();
  cmd_norin->add_option("--in", norin.in, "Use this triangle-free graph as H");
  cmd_norin->add_option("--graph-out", norin.graph_out, "Write H as graph6");
  cmd_norin->add_flag("--require-optimal", norin.require_optimal, "Exit 3 if a solve is only bounded");

  auto* cmd_verify = app.add_subcommand("verify", "Run checks");
  cmd_verify->require_subcommand(1);
  SuiteArgs suite;
  auto* cmd_suite = cmd_verify->add_subcommand("suite", "alpha1 + tau inequalities");
  cmd_suite->add_option("--in", suite.in, "graph6 input");
  cmd_suite->add_option("--random", suite.random, "Number of random graphs")->capture_default_str();
  cmd_suite->add_option("--n-max", suite.n_max, "Largest random order")->capture_default_str();

  TritauArgs tritau;
  auto* cmd_tritau = cmd_verify->add_subcommand("tritau", "Join formula against direct solves");
  cmd_tritau->add_option("--exhaustive-n", tritau.exhaustive_n, "Exhaustive range (<= 6)")->capture_default_str();
  cmd_tritau->add_option("--k", tritau.k, "Hub counts")->delimiter(',')->capture_default_str();
  cmd_tritau->add_option("--samples", tritau.samples, "Sampled graphs at n = 6..8")->capture_default_str();

  TightnessArgs tight;
  auto* cmd_tight = cmd_verify->add_subcommand("tightness", "Extremal families and the disjoint baseline");
  cmd_tight->add_option("--n", tight.n, "Even orders")->delimiter(',')->capture_default_str();
  cmd_tight->add_option("--s", tight.s, "Clique order in the baseline")->capture_default_str();
  cmd_tight->add_option("--t", tight.t, "Bipartite side in the baseline")->capture_default_str();

  auto add_sample = [](CLI::App* cmd, SampleArgs& a) {
    cmd->add_option("--in", a.in, "graph6 input instead of sampling");
    cmd->add_option("--n", a.n, "Order of sampled graphs")->capture_default_str();
    cmd->add_option("--theta", a.theta, "p = n^-theta")->capture_default_str();
    cmd->add_option("--p", a.p, "Override p");
    cmd->add_option("--eps", a.eps, "epsilon")->capture_default_str();
    cmd->add_option("--seeds", a.seeds, "Number of sampled graphs (seeds seed..seed+k-1)")->capture_default_str();
    cmd->add_flag("--clean", a.clean, "Delete a minimal triangle cover first");
  };
  SampleArgs density;
  std::size_t density_effort = 200;
  auto* cmd_density = cmd_verify->add_subcommand("density", "Search for sparse large vertex sets");
  add_sample(cmd_density, density);
  cmd_density->add_option("--effort", density_effort, "Random restarts")->capture_default_str();

  SampleArgs phib;
  std::string phib_d = "min-ratio";
  auto* cmd_phib = cmd_verify->add_subcommand("phibound", "max phi_k against k^2/(2(1-eps)p)");
  add_sample(cmd_phib, phib);
  cmd_phib->add_option("--d", phib_d, "d, or min-ratio / sum-ratio")->capture_default_str();

  SweepArgs sweep;
  auto* cmd_sweep = app.add_subcommand("sweep", "Ratio pipeline over a parameter grid (csv)");
  cmd_sweep->add_option("--n", sweep.n, "Comma-separated orders")->capture_default_str();
  cmd_sweep->add_option("--d", sweep.d, "Comma-separated d values or keywords")->capture_default_str();
  cmd_sweep->add_option("--eps", sweep.eps, "Comma-separated epsilons")->capture_default_str();
  cmd_sweep->add_option("--seeds", sweep.seeds, "Comma-separated seeds");
  cmd_sweep->add_option("--seed-count", sweep.seed_count, "Seeds seed..seed+k-1 when --seeds is absent")
      ->capture_default_str();
  cmd_sweep->add_option("--theta", sweep.theta, "p = n^-theta")->capture_default_str();
  cmd_sweep->add_option("--c", sweep.c, "c for the margin column")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_gen) return run_gen(gen, shared);
    if (*cmd_solve) return run_solve(solve, shared, cmd_solve);
    if (*cmd_egt) return run_egt(egt, shared, cmd_egt);
    if (*cmd_norin) return run_norin(norin, shared, cmd_norin);
    if (*cmd_suite) return run_suite(suite, shared, cmd_suite);
    if (*cmd_tritau) return run_tritau(tritau, shared, cmd_tritau);
    if (*cmd_tight) return run_tightness(tight, shared, cmd_tight);
    if (*cmd_density) return run_density(density, density_effort, shared, cmd_density);
    if (*cmd_phib) return run_phibound(phib, phib_d, shared, cmd_phib);
    if (*cmd_sweep) return run_sweep(sweep, shared, cmd_sweep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
