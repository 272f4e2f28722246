#include "spread/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spread {

namespace {

// Branch and bound over include/exclude decisions. Prunes on cost
// against the best known solution, on partial sets that already cover
// (supersets only cost more), and on partial sets that cannot cover
// even with every undecided vertex added.
struct SubsetSearch {
  const Graph& g;
  const ThresholdMap& t;
  const CostMap& c;
  std::vector<int> chosen;
  std::vector<int> best_set;
  long long best_cost;

  SubsetSearch(const Graph& g_, const ThresholdMap& t_, const CostMap& c_)
      : g(g_), t(t_), c(c_) {
    best_set.resize(g.n);
    std::iota(best_set.begin(), best_set.end(), 0);
    best_cost = 0;
    for (int v = 0; v < g.n; ++v) best_cost += c[v];
  }

  bool covers_with_suffix(int from) const {
    std::vector<int> seeds(chosen);
    for (int v = from; v < g.n; ++v) seeds.push_back(v);
    return is_target_set(g, t, seeds);
  }

  // just_included skips re-checking coverage along exclude chains,
  // where `chosen` has not changed since the parent node.
  void descend(int v, long long cost, bool just_included) {
    if (cost >= best_cost) return;
    if (just_included && is_target_set(g, t, chosen)) {
      best_cost = cost;
      best_set = chosen;
      return;
    }
    if (v == g.n) return;
    if (!covers_with_suffix(v)) return;

    chosen.push_back(v);
    descend(v + 1, cost + c[v], true);
    chosen.pop_back();
    descend(v + 1, cost, false);
  }
};

long long threshold_sum(const ThresholdMap& t) {
  long long sum = 0;
  for (int x : t) sum += x;
  return sum;
}

// Enumerates all vectors with sum(s) == total and 0 <= s(v) <= t(v) in
// lexicographic order, stopping at the first target vector.
struct VectorSearch {
  const Graph& g;
  const ThresholdMap& t;
  std::vector<long long> cap_suffix;  // sum of t(v) over v..n-1
  IncentiveVector s;
  IncentiveVector found;

  VectorSearch(const Graph& g_, const ThresholdMap& t_) : g(g_), t(t_), s(g_.n, 0) {
    cap_suffix.assign(g.n + 1, 0);
    for (int v = g.n - 1; v >= 0; --v) cap_suffix[v] = cap_suffix[v + 1] + t[v];
  }

  bool fill(int v, long long remaining) {
    if (remaining > cap_suffix[v]) return false;
    if (v == g.n) {
      if (is_target_vector(g, t, s)) {
        found = s;
        return true;
      }
      return false;
    }
    int cap = static_cast<int>(std::min<long long>(t[v], remaining));
    for (int x = 0; x <= cap; ++x) {
      s[v] = x;
      if (fill(v + 1, remaining - x)) return true;
    }
    s[v] = 0;
    return false;
  }
};

}  // namespace

WtssOracleResult brute_force_wtss(const Graph& g, const ThresholdMap& t, const CostMap& c,
                                  int max_vertices) {
  validate_thresholds(g, t);
  validate_costs(g, c);
  if (g.n > max_vertices)
    throw std::invalid_argument("brute_force_wtss: " + std::to_string(g.n) +
                                " vertices exceeds limit " + std::to_string(max_vertices));
  SubsetSearch search(g, t, c);
  search.descend(0, 0, true);
  return {search.best_cost, search.best_set};
}

TpiOracleResult brute_force_tpi(const Graph& g, const ThresholdMap& t,
                                TpiOracleLimits limits) {
  validate_thresholds(g, t);
  if (g.n > limits.max_vertices)
    throw std::invalid_argument("brute_force_tpi: " + std::to_string(g.n) +
                                " vertices exceeds limit " +
                                std::to_string(limits.max_vertices));
  long long total_t = threshold_sum(t);
  if (total_t > limits.max_threshold_sum)
    throw std::invalid_argument("brute_force_tpi: threshold sum " +
                                std::to_string(total_t) + " exceeds limit " +
                                std::to_string(limits.max_threshold_sum));

  // s = t is always a target vector, so the deepening terminates.
  VectorSearch search(g, t);
  for (long long total = 0;; ++total) {
    if (search.fill(0, total)) return {total, search.found};
  }
}

TssOracleResult brute_force_tss(const Graph& g, const ThresholdMap& t, int max_vertices) {
  validate_thresholds(g, t);
  if (g.n > max_vertices)
    throw std::invalid_argument("brute_force_tss: " + std::to_string(g.n) +
                                " vertices exceeds limit " + std::to_string(max_vertices));
  // Subsets of each size in lexicographic order; S = V always covers.
  std::vector<int> pick;
  std::function<bool(int, int)> choose = [&](int from, int left) {
    if (left == 0) return is_target_set(g, t, pick);
    for (int v = from; v <= g.n - left; ++v) {
      pick.push_back(v);
      if (choose(v + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0;; ++size) {
    pick.clear();
    if (choose(0, size)) return {size, pick};
  }
}

long long tree_optimal_cost(const Graph& g, const ThresholdMap& t) {
  validate_thresholds(g, t);
  if (g.n == 0) throw std::invalid_argument("tree_optimal_cost: empty graph");
  if (g.m != g.n - 1)
    throw std::invalid_argument("tree_optimal_cost: graph is not a tree");
  // connectivity check; with m = n-1 this also rules out cycles
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
  if (visited != g.n)
    throw std::invalid_argument("tree_optimal_cost: graph is not connected");

  long long cost = g.n - 1;
  for (int v = 0; v < g.n; ++v) cost -= g.degree(v) - t[v];
  return cost;
}

GadgetGraph build_gadget(const Graph& g, const ThresholdMap& t) {
  validate_thresholds(g, t);
  GadgetGraph out;
  out.hub.resize(g.n);
  out.collector.resize(g.n);
  out.path_first.resize(g.n);

  int total = 0;
  for (int v = 0; v < g.n; ++v) {
    int d = g.degree(v);
    if (t[v] > d)
      throw std::invalid_argument("build_gadget: threshold of vertex " +
                                  std::to_string(v) + " exceeds its degree");
    out.hub[v] = total;
    out.collector[v] = total + 1;
    out.path_first[v] = total + 2;
    total += d + 2;
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * g.m + 2 * g.m);
  for (int v = 0; v < g.n; ++v) {
    for (int i = 0; i < g.degree(v); ++i) {
      int mid = out.path_first[v] + i;
      edges.emplace_back(out.hub[v], mid);
      edges.emplace_back(mid, out.collector[v]);
    }
    for (int u : g.neighbors(v))
      if (v < u) edges.emplace_back(out.hub[v], out.hub[u]);
  }

  out.graph = build_graph(total, std::move(edges));
  out.thresholds.assign(total, 1);
  for (int v = 0; v < g.n; ++v) out.thresholds[out.hub[v]] = t[v];
  return out;
}

}  // namespace spread
