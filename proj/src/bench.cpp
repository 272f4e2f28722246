#include "spread/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "spread/baselines.hpp"
#include "spread/diffusion.hpp"
#include "spread/rng.hpp"
#include "spread/tpi.hpp"
#include "spread/wtss.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spread {

Graph make_clique(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, std::move(edges));
}

Graph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, std::move(edges));
}

Graph make_star(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return build_graph(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  if (n == 1) return build_graph(1, {});
  if (n == 2) return build_graph(2, {{0, 1}});
  // Decode a uniform Pruefer sequence, so every labeled tree is equally
  // likely.
  Rng rng(seed);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      while (deg[++ptr] != 1) {
      }
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return build_graph(n, std::move(edges));
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_gnp: negative n");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_gnp: p outside [0,1]");
  if (n <= 1 || p == 0.0) return build_graph(std::max(n, 0), {});
  if (p == 1.0) return make_clique(n);

  // Geometric gap sampling over the lexicographic pair stream, O(n + m).
  Rng rng(seed);
  const double log1mp = std::log1p(-p);
  std::vector<std::pair<int, int>> edges;
  long long v = 1, w = -1;
  while (v < n) {
    double r = rng.unit();
    w += 1 + static_cast<long long>(std::floor(std::log(r) / log1mp));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) edges.emplace_back(static_cast<int>(w), static_cast<int>(v));
  }
  return build_graph(n, std::move(edges));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_ll(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": '" + s + "'");
  }
}

}  // namespace

Graph synth_graph(const std::string& spec) {
  auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto want = [&](size_t args) {
    if (parts.size() != args + 1)
      throw std::invalid_argument("synth spec '" + spec + "': expected " +
                                  std::to_string(args) + " arguments");
  };
  if (kind == "clique") {
    want(1);
    return make_clique(static_cast<int>(parse_ll(parts[1], "vertex count")));
  }
  if (kind == "path") {
    want(1);
    return make_path(static_cast<int>(parse_ll(parts[1], "vertex count")));
  }
  if (kind == "star") {
    want(1);
    return make_star(static_cast<int>(parse_ll(parts[1], "vertex count")));
  }
  if (kind == "tree") {
    want(2);
    return random_tree(static_cast<int>(parse_ll(parts[1], "vertex count")),
                       static_cast<std::uint64_t>(parse_ll(parts[2], "seed")));
  }
  if (kind == "gnp") {
    want(3);
    return random_gnp(static_cast<int>(parse_ll(parts[1], "vertex count")),
                      parse_double(parts[2], "edge probability"),
                      static_cast<std::uint64_t>(parse_ll(parts[3], "seed")));
  }
  throw std::invalid_argument("unknown synthetic graph kind '" + kind + "'");
}

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::Wtss: return "wtss";
    case Algo::Tpi: return "tpi";
    case Algo::DegreeInt: return "degree-int";
    case Algo::DiscountInt: return "discount-int";
    case Algo::DegreeFrac: return "degree-frac";
    case Algo::DiscountFrac: return "discount-frac";
  }
  return "?";
}

Algo parse_algo(const std::string& name) {
  for (Algo a : all_algos())
    if (algo_name(a) == name) return a;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

const std::vector<Algo>& all_algos() {
  static const std::vector<Algo> algos = {Algo::Wtss,        Algo::Tpi,
                                          Algo::DegreeInt,   Algo::DiscountInt,
                                          Algo::DegreeFrac,  Algo::DiscountFrac};
  return algos;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Random: return "random";
    case Regime::Constant: return "const";
    case Regime::Proportional: return "prop";
  }
  return "?";
}

namespace {

bool algo_is_fractional(Algo a) {
  return a == Algo::Tpi || a == Algo::DegreeFrac || a == Algo::DiscountFrac;
}

bool is_tree_graph(const Graph& g) {
  if (g.n == 0 || g.m != g.n - 1) return false;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
  }
  return visited == g.n;
}

bool is_clique_graph(const Graph& g) {
  return g.m == static_cast<long long>(g.n) * (g.n - 1) / 2;
}

bool costs_ordered_by_threshold(const ThresholdMap& t, const CostMap& c) {
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = 0; j < t.size(); ++j)
      if (t[i] <= t[j] && c[i] > c[j]) return false;
  return true;
}

struct Cell {
  int param_index;
  int trial_index;
  std::string parameter;
  std::string seed_label;
  std::uint64_t seed;
};

struct CellOutcome {
  double cost = 0;
  int rounds = 0;
  double time_ms = 0;
};

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

CellOutcome run_algo_on(const Graph& g, const ThresholdMap& t, const CostMap& c,
                        Algo a) {
  CellOutcome out;
  TargetSet set;
  IncentiveVector inc;
  double start = now_ms();
  switch (a) {
    case Algo::Wtss:
      set = wtss(g, t, c);
      out.cost = static_cast<double>(cost_of_set(set, c));
      break;
    case Algo::Tpi:
      inc = tpi(g, t);
      out.cost = static_cast<double>(cost_of_vector(inc));
      break;
    case Algo::DegreeInt:
    case Algo::DiscountInt: {
      auto r = min_budget(a == Algo::DegreeInt ? Heuristic::DegreeInt
                                               : Heuristic::DiscountInt,
                          g, t, &c);
      set = std::move(r.set);
      out.cost = static_cast<double>(r.beta);
      break;
    }
    case Algo::DegreeFrac:
    case Algo::DiscountFrac: {
      auto r = min_budget(a == Algo::DegreeFrac ? Heuristic::DegreeFrac
                                                : Heuristic::DiscountFrac,
                          g, t, nullptr);
      inc = std::move(r.incentives);
      out.cost = static_cast<double>(r.beta);
      break;
    }
  }
  out.time_ms = now_ms() - start;

  DiffusionTrace trace = algo_is_fractional(a) ? diffuse_incentives(g, t, inc)
                                               : diffuse_set(g, t, set);
  if (static_cast<int>(trace.active.size()) != g.n)
    throw std::runtime_error("verification failed: " + algo_name(a) + " activated " +
                             std::to_string(trace.active.size()) + " of " +
                             std::to_string(g.n) + " vertices");
  out.rounds = trace.converged_round;
  return out;
}

std::string format_number(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string format_param(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  if (config.algos.empty()) throw std::invalid_argument("empty algorithm list");
  if (config.graph_path.empty() == config.synth_spec.empty())
    throw std::invalid_argument("exactly one of graph path / synth spec required");

  Graph g = config.graph_path.empty() ? synth_graph(config.synth_spec)
                                      : load_edge_list_file(config.graph_path);
  std::string network = config.network_label.empty()
                            ? (config.graph_path.empty() ? config.synth_spec
                                                         : config.graph_path)
                            : config.network_label;

  CostMap file_costs;
  bool costs_from_file = false;
  if (config.cost_rule == "t") {
    // derived per cell
  } else if (config.cost_rule.rfind("file:", 0) == 0) {
    std::string path = config.cost_rule.substr(5);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cost file: " + path);
    file_costs = load_value_file(in, g, ValueKind::Cost);
    costs_from_file = true;
  } else {
    throw std::invalid_argument("unknown cost rule '" + config.cost_rule + "'");
  }

  std::vector<Cell> cells;
  switch (config.regime) {
    case Regime::Random: {
      if (config.seeds.empty())
        throw std::invalid_argument("random regime needs at least one seed");
      int trial = 0;
      for (std::uint64_t seed : config.seeds)
        cells.push_back({0, trial++, "-", std::to_string(seed), seed});
      break;
    }
    case Regime::Constant: {
      if (config.const_params.empty())
        throw std::invalid_argument("constant regime needs at least one t value");
      for (size_t i = 0; i < config.const_params.size(); ++i)
        for (int trial = 0; trial < std::max(1, config.trials); ++trial)
          cells.push_back({static_cast<int>(i), trial,
                           std::to_string(config.const_params[i]),
                           std::to_string(trial), 0});
      break;
    }
    case Regime::Proportional: {
      if (config.prop_params.empty())
        throw std::invalid_argument("proportional regime needs at least one alpha");
      for (size_t i = 0; i < config.prop_params.size(); ++i)
        for (int trial = 0; trial < std::max(1, config.trials); ++trial)
          cells.push_back({static_cast<int>(i), trial,
                           format_param(config.prop_params[i]),
                           std::to_string(trial), 0});
      break;
    }
  }

  const bool tree = config.check_optimality && is_tree_graph(g);
  const bool clique = config.check_optimality && is_clique_graph(g);

  std::vector<std::vector<ExperimentRecord>> per_cell(cells.size());
  std::vector<std::string> failures(cells.size());

#pragma omp parallel for schedule(dynamic)
  for (long long ci = 0; ci < static_cast<long long>(cells.size()); ++ci) {
    const Cell& cell = cells[ci];
    try {
      ThresholdMap t;
      switch (config.regime) {
        case Regime::Random: t = random_thresholds(g, cell.seed); break;
        case Regime::Constant:
          t = constant_thresholds(g, config.const_params[cell.param_index]);
          break;
        case Regime::Proportional:
          t = proportional_thresholds(g, config.prop_params[cell.param_index]);
          break;
      }
      CostMap c = costs_from_file ? file_costs : costs_equal_thresholds(t);

      double wtss_cost = -1, tpi_cost = -1;
      std::vector<std::pair<Algo, CellOutcome>> outcomes;
      for (Algo a : config.algos) {
        CellOutcome outcome = run_algo_on(g, t, c, a);
        if (a == Algo::Wtss) wtss_cost = outcome.cost;
        if (a == Algo::Tpi) tpi_cost = outcome.cost;
        outcomes.emplace_back(a, outcome);
      }

      for (size_t ai = 0; ai < outcomes.size(); ++ai) {
        auto [a, outcome] = outcomes[ai];
        double ref = algo_is_fractional(a) ? tpi_cost : wtss_cost;
        if (tree && tpi_cost >= 0 && algo_is_fractional(a) && outcome.cost < tpi_cost)
          throw std::runtime_error("tree optimality violated: " + algo_name(a) +
                                   " beat tpi");
        if (clique && wtss_cost >= 0 && !algo_is_fractional(a) &&
            costs_ordered_by_threshold(t, c) && outcome.cost < wtss_cost)
          throw std::runtime_error("clique optimality violated: " + algo_name(a) +
                                   " beat wtss");
        ExperimentRecord rec;
        rec.network = network;
        rec.algorithm = algo_name(a);
        rec.regime = regime_name(config.regime);
        rec.parameter = cell.parameter;
        rec.seed = cell.seed_label;
        rec.cost = outcome.cost;
        rec.rounds = outcome.rounds;
        rec.time_ms = outcome.time_ms;
        rec.has_overhead = ref >= 0;
        rec.overhead_pct = ref > 0 ? (outcome.cost / ref - 1.0) * 100.0 : 0.0;
        rec.param_index = cell.param_index;
        rec.trial_index = cell.trial_index;
        rec.algo_index = static_cast<int>(ai);
        per_cell[ci].push_back(std::move(rec));
      }
    } catch (const std::exception& e) {
      failures[ci] = std::string(e.what()) + " (network " + network + ", parameter " +
                     cell.parameter + ", seed " + cell.seed_label + ")";
    }
  }

  for (const auto& f : failures)
    if (!f.empty()) throw std::runtime_error(f);

  std::vector<ExperimentRecord> records;
  for (auto& group : per_cell)
    for (auto& rec : group) records.push_back(std::move(rec));
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.param_index, a.trial_index, a.algo_index) <
           std::tie(b.param_index, b.trial_index, b.algo_index);
  });

  // Mean summary rows across random trials, one per algorithm.
  if (config.regime == Regime::Random && config.seeds.size() > 1) {
    for (size_t ai = 0; ai < config.algos.size(); ++ai) {
      ExperimentRecord mean;
      mean.network = network;
      mean.algorithm = algo_name(config.algos[ai]);
      mean.regime = regime_name(config.regime);
      mean.parameter = "-";
      mean.seed = "mean";
      mean.is_mean = true;
      mean.param_index = 1 << 20;
      mean.algo_index = static_cast<int>(ai);
      int count = 0;
      for (const auto& rec : records) {
        if (rec.is_mean || rec.algorithm != mean.algorithm) continue;
        mean.cost += rec.cost;
        mean.rounds += rec.rounds;
        mean.time_ms += rec.time_ms;
        ++count;
      }
      mean.cost /= count;
      mean.rounds /= count;
      mean.time_ms /= count;
      records.push_back(std::move(mean));
    }
    // overheads of the mean rows come from the mean costs
    double mean_wtss = -1, mean_tpi = -1;
    for (const auto& rec : records) {
      if (!rec.is_mean) continue;
      if (rec.algorithm == "wtss") mean_wtss = rec.cost;
      if (rec.algorithm == "tpi") mean_tpi = rec.cost;
    }
    for (auto& rec : records) {
      if (!rec.is_mean) continue;
      double ref = algo_is_fractional(parse_algo(rec.algorithm)) ? mean_tpi : mean_wtss;
      rec.has_overhead = ref >= 0;
      rec.overhead_pct = ref > 0 ? (rec.cost / ref - 1.0) * 100.0 : 0.0;
    }
  }

  return records;
}

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace

std::size_t emit_csv(const std::vector<ExperimentRecord>& records, std::ostream& out) {
  std::ostringstream buf;
  buf << "network,algorithm,regime,parameter,seed,cost,rounds,time_ms,overhead_pct\n";
  for (const auto& rec : records) {
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.3f", rec.time_ms);
    buf << csv_quote(rec.network) << ',' << csv_quote(rec.algorithm) << ','
        << csv_quote(rec.regime) << ',' << csv_quote(rec.parameter) << ','
        << csv_quote(rec.seed) << ',' << format_number(rec.cost) << ','
        << format_number(rec.rounds) << ',' << time_buf << ',';
    if (rec.has_overhead) {
      char pct[32];
      std::snprintf(pct, sizeof pct, "%.2f", rec.overhead_pct);
      buf << pct;
    }
    buf << '\n';
  }
  std::string data = buf.str();
  out << data;
  return data.size();
}

}  // namespace spread
