// Command-line front end: run one algorithm, compare all of them, sweep
// a threshold regime, validate a solution file, query the exact oracles,
// or emit the reduction gadget for a given instance.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "spread/baselines.hpp"
#include "spread/bench.hpp"
#include "spread/diffusion.hpp"
#include "spread/graph.hpp"
#include "spread/oracle.hpp"
#include "spread/thresholds.hpp"
#include "spread/tpi.hpp"
#include "spread/wtss.hpp"

namespace {

using namespace spread;

struct GraphOpts {
  std::string path;
  std::string synth;
};

// Flat key=value config support: --config <file> expands into --key=value
// arguments of the active subcommand. Keys already given explicitly on
// the command line win over config entries.
std::vector<std::string> expand_config_args(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

  for (size_t i = 0; i < args.size(); ++i) {
    std::string path;
    size_t erase_count = 0;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      erase_count = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      erase_count = 1;
    } else {
      continue;
    }

    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::vector<std::string> expanded;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      size_t begin = line.find_first_not_of(" \t");
      if (begin == std::string::npos || line[begin] == '#') continue;
      size_t eq = line.find('=', begin);
      if (eq == std::string::npos)
        throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                 ": expected key=value");
      std::string key = line.substr(begin, eq - begin);
      while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
      std::string value = line.substr(eq + 1);
      size_t vb = value.find_first_not_of(" \t");
      value = vb == std::string::npos ? "" : value.substr(vb);

      bool overridden = false;
      for (const auto& arg : args)
        if (arg == "--" + key || arg.rfind("--" + key + "=", 0) == 0) overridden = true;
      if (!overridden) expanded.push_back("--" + key + "=" + value);
    }
    args.erase(args.begin() + i, args.begin() + i + erase_count);
    args.insert(args.begin() + i, expanded.begin(), expanded.end());
    break;
  }
  return args;
}

void add_graph_opts(CLI::App* cmd, GraphOpts& opts) {
  auto* file = cmd->add_option("--graph", opts.path, "edge list file (u v per line)");
  auto* synth = cmd->add_option("--synth", opts.synth,
                                "synthetic graph spec: clique:N | path:N | star:N | "
                                "tree:N:SEED | gnp:N:P:SEED");
  file->excludes(synth);
}

Graph load_graph(const GraphOpts& opts) {
  if (opts.path.empty() && opts.synth.empty())
    throw CLI::ValidationError("--graph or --synth is required");
  return opts.path.empty() ? synth_graph(opts.synth) : load_edge_list_file(opts.path);
}

// --thresholds random:<seed> | const:<t> | prop:<alpha> | file:<path>
ThresholdMap make_thresholds(const Graph& g, const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "random") return random_thresholds(g, std::stoull(arg));
  if (kind == "const") return constant_thresholds(g, std::stoi(arg));
  if (kind == "prop") return proportional_thresholds(g, std::stod(arg));
  if (kind == "file") {
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open threshold file: " + arg);
    return load_value_file(in, g, ValueKind::Threshold);
  }
  throw std::runtime_error("unknown threshold spec '" + spec + "'");
}

// --costs t | file:<path>
CostMap make_costs(const Graph& g, const ThresholdMap& t, const std::string& spec) {
  if (spec == "t") return costs_equal_thresholds(t);
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cost file: " + path);
    return load_value_file(in, g, ValueKind::Cost);
  }
  throw std::runtime_error("unknown cost spec '" + spec + "'");
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void print_set_solution(std::ostream& out, const Graph& g, const std::string& algo,
                        const TargetSet& set, long long cost) {
  out << "# algo " << algo << "\n# cost " << cost << "\n# vertices " << set.size()
      << "\n";
  for (int v : set) out << g.original_id[v] << '\n';
}

void print_vector_solution(std::ostream& out, const Graph& g, const std::string& algo,
                           const IncentiveVector& s, long long cost) {
  size_t nonzero = 0;
  for (int x : s) nonzero += x > 0;
  out << "# algo " << algo << "\n# cost " << cost << "\n# vertices " << nonzero << "\n";
  for (int v = 0; v < g.n; ++v)
    if (s[v] > 0) out << g.original_id[v] << ' ' << s[v] << '\n';
}

struct Solution {
  bool fractional = false;
  TargetSet set;
  IncentiveVector incentives;
  long long cost = 0;  // baselines report the budget they needed
};

Solution run_algorithm(const Graph& g, const ThresholdMap& t, const CostMap& c,
                       Algo algo, std::optional<long long> beta) {
  if (beta && (algo == Algo::Wtss || algo == Algo::Tpi))
    throw std::runtime_error("--beta only applies to the baseline heuristics");
  Solution sol;
  switch (algo) {
    case Algo::Wtss:
      sol.set = wtss(g, t, c);
      sol.cost = cost_of_set(sol.set, c);
      return sol;
    case Algo::Tpi:
      sol.fractional = true;
      sol.incentives = tpi(g, t);
      sol.cost = cost_of_vector(sol.incentives);
      return sol;
    default: break;
  }
  Heuristic h = algo == Algo::DegreeInt      ? Heuristic::DegreeInt
                : algo == Algo::DiscountInt  ? Heuristic::DiscountInt
                : algo == Algo::DegreeFrac   ? Heuristic::DegreeFrac
                                             : Heuristic::DiscountFrac;
  sol.fractional = is_fractional(h);
  if (beta) {
    // single-shot at a fixed budget
    switch (h) {
      case Heuristic::DegreeInt: sol.set = degree_int(g, t, c, *beta); break;
      case Heuristic::DiscountInt: sol.set = discount_int(g, t, c, *beta); break;
      case Heuristic::DegreeFrac: sol.incentives = degree_frac(g, t, *beta); break;
      case Heuristic::DiscountFrac: sol.incentives = discount_frac(g, t, *beta); break;
    }
    sol.cost = sol.fractional ? cost_of_vector(sol.incentives) : cost_of_set(sol.set, c);
    return sol;
  }
  auto r = min_budget(h, g, t, sol.fractional ? nullptr : &c);
  sol.set = std::move(r.set);
  sol.incentives = std::move(r.incentives);
  sol.cost = r.beta;
  return sol;
}

void emit_solution(std::ostream& out, const Graph& g, Algo algo, const Solution& sol) {
  if (sol.fractional)
    print_vector_solution(out, g, algo_name(algo), sol.incentives, sol.cost);
  else
    print_set_solution(out, g, algo_name(algo), sol.set, sol.cost);
}

int cmd_run(const GraphOpts& gopts, const std::string& thresholds_spec,
            const std::string& costs_spec, const std::string& algo_name_arg,
            std::optional<long long> beta, const std::string& out_path,
            const std::string& trace_path) {
  Graph g = load_graph(gopts);
  ThresholdMap t = make_thresholds(g, thresholds_spec);
  CostMap c = make_costs(g, t, costs_spec);
  Algo algo = parse_algo(algo_name_arg);

  if (!trace_path.empty()) {
    std::ofstream trace_file;
    std::ostream& tout = open_sink(trace_path, trace_file);
    if (algo == Algo::Wtss) {
      WtssResult r = wtss_trace(g, t, c);
      tout << "iter,vertex,case\n";
      for (size_t i = 0; i < r.steps.size(); ++i)
        tout << i + 1 << ',' << g.original_id[r.steps[i].vertex] << ','
             << static_cast<int>(r.steps[i].kind) << '\n';
    } else if (algo == Algo::Tpi) {
      TpiResult r = tpi_trace(g, t);
      tout << "iter,vertex,case,sigma\n";
      for (size_t i = 0; i < r.steps.size(); ++i)
        tout << i + 1 << ',' << g.original_id[r.steps[i].vertex] << ','
             << static_cast<int>(r.steps[i].kind) << ',' << r.steps[i].sigma << '\n';
    } else {
      throw std::runtime_error("--trace is only available for wtss and tpi");
    }
  }

  Solution sol = run_algorithm(g, t, c, algo, beta);
  std::ofstream file;
  std::ostream& out = open_sink(out_path, file);
  emit_solution(out, g, algo, sol);
  return 0;
}

int cmd_compare(const GraphOpts& gopts, const std::string& thresholds_spec,
                const std::string& costs_spec, const std::string& out_path) {
  Graph g = load_graph(gopts);
  ThresholdMap t = make_thresholds(g, thresholds_spec);
  CostMap c = make_costs(g, t, costs_spec);

  std::ofstream file;
  std::ostream& out = open_sink(out_path, file);
  out << "algorithm,cost,valid\n";
  for (Algo algo : all_algos()) {
    Solution sol = run_algorithm(g, t, c, algo, std::nullopt);
    bool valid = sol.fractional ? is_target_vector(g, t, sol.incentives)
                                : is_target_set(g, t, sol.set);
    out << algo_name(algo) << ',' << sol.cost << ',' << (valid ? "yes" : "no") << '\n';
  }
  return 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_sweep(const GraphOpts& gopts, const std::string& regime,
              const std::string& params, const std::string& costs_spec,
              const std::string& algos, std::optional<long long> seed, int trials,
              const std::string& out_path) {
  ExperimentConfig config;
  config.graph_path = gopts.path;
  config.synth_spec = gopts.synth;
  config.cost_rule = costs_spec;
  for (const auto& name : split_list(algos)) config.algos.push_back(parse_algo(name));
  if (config.algos.empty()) config.algos = all_algos();

  if (regime == "random") {
    config.regime = Regime::Random;
    if (!seed) throw CLI::ValidationError("--seed is required for the random regime");
    for (int i = 0; i < std::max(1, trials); ++i)
      config.seeds.push_back(static_cast<std::uint64_t>(*seed) + i);
  } else if (regime == "const") {
    config.regime = Regime::Constant;
    if (params.empty())
      for (int v = 2; v <= 10; ++v) config.const_params.push_back(v);
    else
      for (const auto& p : split_list(params)) config.const_params.push_back(std::stoi(p));
    config.trials = trials;
  } else if (regime == "prop") {
    config.regime = Regime::Proportional;
    if (params.empty())
      for (int i = 1; i <= 9; ++i) config.prop_params.push_back(i / 10.0);
    else
      for (const auto& p : split_list(params)) config.prop_params.push_back(std::stod(p));
    config.trials = trials;
  } else {
    throw CLI::ValidationError("regime must be random, const, or prop");
  }

  auto records = run_experiment(config);
  std::ofstream file;
  std::ostream& out = open_sink(out_path, file);
  emit_csv(records, out);
  return 0;
}

// Solution files: '#' comments; one token per line is a seed vertex,
// two tokens are "id incentive".
int cmd_validate(const GraphOpts& gopts, const std::string& thresholds_spec,
                 const std::string& solution_path) {
  Graph g = load_graph(gopts);
  ThresholdMap t = make_thresholds(g, thresholds_spec);

  std::ifstream in(solution_path);
  if (!in) throw std::runtime_error("cannot open solution file: " + solution_path);
  std::unordered_map<std::uint64_t, int> dense;
  for (int v = 0; v < g.n; ++v) dense.emplace(g.original_id[v], v);

  TargetSet set;
  IncentiveVector inc(g.n, 0);
  bool fractional = false;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string a, b;
    ls >> a;
    if (a.empty() || a[0] == '#') continue;
    auto it = dense.find(std::stoull(a));
    if (it == dense.end())
      throw std::runtime_error("solution line " + std::to_string(line_no) +
                               ": unknown vertex id " + a);
    if (ls >> b) {
      fractional = true;
      inc[it->second] = std::stoi(b);
    } else {
      set.push_back(it->second);
    }
  }
  if (fractional && !set.empty())
    throw std::runtime_error("solution file mixes seed lines and incentive lines");

  DiffusionTrace trace =
      fractional ? diffuse_incentives(g, t, inc) : diffuse_set(g, t, set);
  double pct = g.n == 0 ? 100.0 : 100.0 * static_cast<double>(trace.active.size()) / g.n;
  bool pass = static_cast<int>(trace.active.size()) == g.n;
  std::printf("activated %zu/%d (%.1f%%)\nrounds %d\n%s\n", trace.active.size(), g.n,
              pct, trace.converged_round, pass ? "PASS" : "FAIL");
  return pass ? 0 : 1;
}

int cmd_oracle(const GraphOpts& gopts, const std::string& problem,
               const std::string& thresholds_spec, const std::string& costs_spec,
               const std::string& out_path) {
  Graph g = load_graph(gopts);
  ThresholdMap t = make_thresholds(g, thresholds_spec);
  std::ofstream file;
  std::ostream& out = open_sink(out_path, file);
  if (problem == "tss") {
    auto r = brute_force_tss(g, t);
    print_set_solution(out, g, "oracle-tss", r.set, r.size);
  } else if (problem == "wtss") {
    CostMap c = make_costs(g, t, costs_spec);
    auto r = brute_force_wtss(g, t, c);
    print_set_solution(out, g, "oracle-wtss", r.set, r.cost);
  } else if (problem == "tpi") {
    auto r = brute_force_tpi(g, t);
    print_vector_solution(out, g, "oracle-tpi", r.incentives, r.cost);
  } else {
    throw CLI::ValidationError("--problem must be tss, wtss, or tpi");
  }
  return 0;
}

int cmd_gadget(const GraphOpts& gopts, const std::string& thresholds_spec,
               const std::string& edges_out, const std::string& thresholds_out) {
  Graph g = load_graph(gopts);
  ThresholdMap t = make_thresholds(g, thresholds_spec);
  GadgetGraph gadget = build_gadget(g, t);

  std::ofstream ef(edges_out);
  if (!ef) throw std::runtime_error("cannot open output file: " + edges_out);
  emit_edge_list(gadget.graph, ef);

  std::ofstream tf(thresholds_out);
  if (!tf) throw std::runtime_error("cannot open output file: " + thresholds_out);
  emit_value_file(tf, gadget.graph, gadget.thresholds);

  std::cout << "gadget: " << gadget.graph.n << " vertices, " << gadget.graph.m
            << " edges\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-cost seeding of threshold diffusion in networks"};
  app.require_subcommand(1);

  GraphOpts gopts;
  std::string thresholds_spec, costs_spec = "t";
  std::string algo_arg, out_path, trace_path, regime, params, algos, problem;
  std::string solution_path, edges_out, thresholds_out;
  std::optional<long long> beta, seed;
  int trials = 1;

  std::string config_dummy;
  auto add_common = [&](CLI::App* cmd, bool with_costs) {
    add_graph_opts(cmd, gopts);
    cmd->add_option("--thresholds", thresholds_spec,
                    "random:<seed> | const:<t> | prop:<alpha> | file:<path>")
        ->required();
    if (with_costs) cmd->add_option("--costs", costs_spec, "t | file:<path>");
    // consumed before parsing; registered for --help only
    cmd->add_option("--config", config_dummy, "flat key=value config file");
  };

  auto* run = app.add_subcommand("run", "run one algorithm");
  add_common(run, true);
  run->add_option("--algo", algo_arg,
                  "wtss | tpi | degree-int | discount-int | degree-frac | discount-frac")
      ->required();
  run->add_option("--beta", beta, "fixed budget (baselines only; default: minimal search)");
  run->add_option("--out", out_path, "solution file (default stdout)");
  run->add_option("--trace", trace_path, "write per-iteration CSV log (wtss/tpi)");

  auto* compare = app.add_subcommand("compare", "run all six algorithms");
  add_common(compare, true);
  compare->add_option("--out", out_path, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "regime grid to CSV");
  add_graph_opts(sweep, gopts);
  sweep->add_option("--config", config_dummy, "flat key=value config file");
  sweep->add_option("--regime", regime, "random | const | prop")->required();
  sweep->add_option("--params", params, "comma list (default: const 2..10, prop 0.1..0.9)");
  sweep->add_option("--costs", costs_spec, "t | file:<path>");
  sweep->add_option("--algos", algos, "comma list (default: all six)");
  sweep->add_option("--seed", seed, "base seed (required for random regime)");
  sweep->add_option("--trials", trials, "threshold draws per setting");
  sweep->add_option("--out", out_path, "CSV file (default stdout)");

  auto* validate = app.add_subcommand("validate", "check a solution file");
  add_common(validate, false);
  validate->add_option("--solution", solution_path, "solution file")->required();

  auto* oracle = app.add_subcommand("oracle", "exact optimum on small instances");
  add_common(oracle, true);
  oracle->add_option("--problem", problem, "tss | wtss | tpi")->required();
  oracle->add_option("--out", out_path, "solution file (default stdout)");

  auto* gadget = app.add_subcommand("gadget", "emit the TSS-to-TPI reduction instance");
  add_common(gadget, false);
  gadget->add_option("--edges-out", edges_out, "gadget edge list")->required();
  gadget->add_option("--thresholds-out", thresholds_out, "gadget threshold file")
      ->required();

  try {
    std::vector<std::string> args = expand_config_args(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (run->parsed())
      return cmd_run(gopts, thresholds_spec, costs_spec, algo_arg, beta, out_path,
                     trace_path);
    if (compare->parsed()) return cmd_compare(gopts, thresholds_spec, costs_spec, out_path);
    if (sweep->parsed())
      return cmd_sweep(gopts, regime, params, costs_spec, algos, seed, trials, out_path);
    if (validate->parsed()) return cmd_validate(gopts, thresholds_spec, solution_path);
    if (oracle->parsed())
      return cmd_oracle(gopts, problem, thresholds_spec, costs_spec, out_path);
    if (gadget->parsed())
      return cmd_gadget(gopts, thresholds_spec, edges_out, thresholds_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
