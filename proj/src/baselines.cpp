#include "spread/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

namespace spread {

namespace {

void validate_beta(long long beta) {
  if (beta < 0) throw std::invalid_argument("budget must be >= 0");
}

// Vertex order used by all four heuristics: degree descending, id
// ascending within equal degrees.
std::vector<int> by_degree_desc(const Graph& g) {
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Highest working degree first, smallest id within ties. Lazy heap:
// stale snapshots are discarded on pop.
class WorkingDegreeQueue {
 public:
  explicit WorkingDegreeQueue(const std::vector<int>& wd) {
    for (int v = 0; v < static_cast<int>(wd.size()); ++v) heap_.push({wd[v], -v});
  }

  void touched(int v, const std::vector<int>& wd) { heap_.push({wd[v], -v}); }

  int pop(const std::vector<int>& wd, const std::vector<char>& done) {
    while (!heap_.empty()) {
      auto [deg, neg] = heap_.top();
      heap_.pop();
      int v = -neg;
      if (!done[v] && wd[v] == deg) return v;
    }
    return -1;
  }

 private:
  std::priority_queue<std::pair<int, int>> heap_;
};

}  // namespace

TargetSet degree_int(const Graph& g, [[maybe_unused]] const ThresholdMap& t,
                     const CostMap& c, long long beta) {
  validate_costs(g, c);
  validate_beta(beta);
  TargetSet out;
  long long spent = 0;
  for (int v : by_degree_desc(g)) {
    if (spent + c[v] > beta) continue;
    spent += c[v];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TargetSet discount_int(const Graph& g, [[maybe_unused]] const ThresholdMap& t,
                       const CostMap& c, long long beta) {
  validate_costs(g, c);
  validate_beta(beta);
  std::vector<int> wd(g.n);
  for (int v = 0; v < g.n; ++v) wd[v] = g.degree(v);
  std::vector<char> done(g.n, 0);
  WorkingDegreeQueue queue(wd);
  TargetSet out;
  long long spent = 0;
  for (int v = queue.pop(wd, done); v >= 0; v = queue.pop(wd, done)) {
    done[v] = 1;
    if (spent + c[v] > beta) continue;  // unaffordable, move to the next candidate
    spent += c[v];
    out.push_back(v);
    for (int u : g.neighbors(v)) {
      --wd[u];
      if (!done[u]) queue.touched(u, wd);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IncentiveVector degree_frac(const Graph& g, [[maybe_unused]] const ThresholdMap& t,
                            long long beta) {
  validate_beta(beta);
  if (g.m < 1) throw std::invalid_argument("degree_frac: graph has no edges");
  IncentiveVector s(g.n, 0);
  long long handed = 0;
  for (int v = 0; v < g.n; ++v) {
    s[v] = static_cast<int>(static_cast<__int128>(g.degree(v)) * beta / (2 * g.m));
    handed += s[v];
  }
  long long leftover = beta - handed;  // < n, since the shares sum to beta exactly
  for (int v : by_degree_desc(g)) {
    if (leftover == 0) break;
    ++s[v];
    --leftover;
  }
  return s;
}

IncentiveVector discount_frac(const Graph& g, const ThresholdMap& t, long long beta) {
  validate_thresholds(g, t);
  validate_beta(beta);
  std::vector<int> wd(g.n);
  for (int v = 0; v < g.n; ++v) wd[v] = g.degree(v);
  std::vector<char> selected(g.n, 0);
  std::vector<int> selected_nbrs(g.n, 0);
  WorkingDegreeQueue queue(wd);
  IncentiveVector s(g.n, 0);
  long long spent = 0;
  for (int v = queue.pop(wd, selected); v >= 0; v = queue.pop(wd, selected)) {
    long long need = std::max(0, t[v] - selected_nbrs[v]);
    if (spent + need > beta) {
      // spend-all: park the remainder on the vertex that broke the bank
      s[v] = static_cast<int>(beta - spent);
      break;
    }
    s[v] = static_cast<int>(need);
    spent += need;
    selected[v] = 1;
    for (int u : g.neighbors(v)) {
      --wd[u];
      ++selected_nbrs[u];
      if (!selected[u]) queue.touched(u, wd);
    }
  }
  return s;
}

bool is_fractional(Heuristic h) {
  return h == Heuristic::DegreeFrac || h == Heuristic::DiscountFrac;
}

std::string heuristic_name(Heuristic h) {
  switch (h) {
    case Heuristic::DegreeInt: return "degree-int";
    case Heuristic::DiscountInt: return "discount-int";
    case Heuristic::DegreeFrac: return "degree-frac";
    case Heuristic::DiscountFrac: return "discount-frac";
  }
  return "?";
}

MinBudgetResult min_budget(Heuristic h, const Graph& g, const ThresholdMap& t,
                           const CostMap* c) {
  validate_thresholds(g, t);
  bool frac = is_fractional(h);
  if (!frac) {
    if (c == nullptr)
      throw std::invalid_argument("min_budget: integral heuristic needs a cost map");
    validate_costs(g, *c);
  }

  MinBudgetResult result;
  result.fractional = frac;

  auto feasible = [&](long long beta, MinBudgetResult& out) {
    switch (h) {
      case Heuristic::DegreeInt:
        out.set = degree_int(g, t, *c, beta);
        return is_target_set(g, t, out.set);
      case Heuristic::DiscountInt:
        out.set = discount_int(g, t, *c, beta);
        return is_target_set(g, t, out.set);
      case Heuristic::DegreeFrac:
        out.incentives = degree_frac(g, t, beta);
        return is_target_vector(g, t, out.incentives);
      case Heuristic::DiscountFrac:
        out.incentives = discount_frac(g, t, beta);
        return is_target_vector(g, t, out.incentives);
    }
    return false;
  };

  long long hi = 0;
  for (int v = 0; v < g.n; ++v)
    hi += frac ? t[v] : std::min<long long>(t[v], (*c)[v]);

  // The heuristics are not guaranteed feasible at the nominal cap (or at
  // all); double the cap a few times before giving up.
  MinBudgetResult probe;
  probe.fractional = frac;
  long long cap_limit = std::max<long long>(1, hi) * 16 + 4 * g.m + g.n;
  while (!feasible(hi, probe)) {
    if (hi > cap_limit)
      throw std::runtime_error("min_budget: " + heuristic_name(h) +
                               " never reaches full activation");
    hi = hi * 2 + 1;
  }

  long long lo = 0;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (feasible(mid, probe))
      hi = mid;
    else
      lo = mid + 1;
  }

  // Non-monotone heuristics can leave the binary search on an infeasible
  // point or miss smaller feasible budgets next to it; walk to a
  // feasible point, then downward while feasibility persists.
  long long beta = lo;
  while (!feasible(beta, probe)) ++beta;
  while (beta > 0 && feasible(beta - 1, probe)) --beta;

  feasible(beta, result);
  result.beta = beta;
  return result;
}

}  // namespace spread
