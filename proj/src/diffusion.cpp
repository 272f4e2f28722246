#include "spread/diffusion.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spread {

namespace {

// Frontiers at least this large are expanded with OpenMP.
constexpr size_t kParallelFrontier = 4096;

std::vector<int> sorted_unique_seeds(const Graph& g, const TargetSet& seeds) {
  std::vector<int> s(seeds);
  for (int v : s)
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("seed vertex " + std::to_string(v) + " out of range");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void validate_incentives(const Graph& g, const IncentiveVector& s) {
  if (static_cast<int>(s.size()) != g.n)
    throw std::invalid_argument("incentive vector size does not match vertex count");
  for (int v = 0; v < g.n; ++v)
    if (s[v] < 0)
      throw std::invalid_argument("incentive of vertex " + std::to_string(v) +
                                  " must be >= 0");
}

// Counter-based expansion of one frontier. `need` is the residual
// threshold; every vertex outside round 0 has need >= 1, so the counter
// crosses == need exactly once and each vertex is enqueued exactly once.
void expand_frontier(const Graph& g, const std::vector<int>& need,
                     const std::vector<char>& active, std::vector<int>& gained,
                     const std::vector<int>& frontier, std::vector<int>& next) {
  next.clear();
#ifdef _OPENMP
  if (frontier.size() >= kParallelFrontier && omp_get_max_threads() > 1) {
    std::vector<std::vector<int>> local(omp_get_max_threads());
#pragma omp parallel
    {
      std::vector<int>& mine = local[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 256)
      for (long long i = 0; i < static_cast<long long>(frontier.size()); ++i) {
        for (int u : g.neighbors(frontier[i])) {
          if (active[u]) continue;
          int got;
#pragma omp atomic capture
          got = ++gained[u];
          if (got == need[u]) mine.push_back(u);
        }
      }
    }
    for (auto& buf : local) next.insert(next.end(), buf.begin(), buf.end());
    std::sort(next.begin(), next.end());
    return;
  }
#endif
  for (int v : frontier)
    for (int u : g.neighbors(v))
      if (!active[u] && ++gained[u] == need[u]) next.push_back(u);
  std::sort(next.begin(), next.end());
}

DiffusionTrace run_rounds(const Graph& g, const std::vector<int>& need,
                          std::vector<int> round0) {
  DiffusionTrace trace;
  std::vector<char> active(g.n, 0);
  std::vector<int> gained(g.n, 0);
  for (int v : round0) active[v] = 1;

  std::vector<int> frontier = round0;
  trace.rounds.push_back(std::move(round0));
  std::vector<int> next;
  while (!frontier.empty()) {
    expand_frontier(g, need, active, gained, frontier, next);
    if (next.empty()) break;
    for (int v : next) active[v] = 1;
    trace.rounds.push_back(next);
    frontier.swap(next);
  }

  trace.converged_round = static_cast<int>(trace.rounds.size()) - 1;
  for (const auto& round : trace.rounds)
    trace.active.insert(trace.active.end(), round.begin(), round.end());
  std::sort(trace.active.begin(), trace.active.end());
  return trace;
}

// Feasibility-only variant: no round bookkeeping, early exit once
// everything is active. Hot path for the brute-force oracles.
bool run_covers(const Graph& g, const std::vector<int>& need, std::vector<int> frontier) {
  std::vector<char> active(g.n, 0);
  std::vector<int> gained(g.n, 0);
  long long count = static_cast<long long>(frontier.size());
  for (int v : frontier) active[v] = 1;

  std::vector<int> next;
  while (!frontier.empty() && count < g.n) {
    next.clear();
    for (int v : frontier)
      for (int u : g.neighbors(v))
        if (!active[u] && ++gained[u] == need[u]) next.push_back(u);
    for (int v : next) active[v] = 1;
    count += static_cast<long long>(next.size());
    frontier.swap(next);
  }
  return count == g.n;
}

void round0_and_need_from_incentives(const Graph& g, const ThresholdMap& t,
                                     const IncentiveVector& s, std::vector<int>& round0,
                                     std::vector<int>& need) {
  round0.clear();
  need.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    need[v] = t[v] - s[v];
    if (need[v] <= 0) round0.push_back(v);
  }
}

}  // namespace

DiffusionTrace diffuse_set(const Graph& g, const ThresholdMap& t, const TargetSet& seeds) {
  validate_thresholds(g, t);
  return run_rounds(g, t, sorted_unique_seeds(g, seeds));
}

DiffusionTrace diffuse_incentives(const Graph& g, const ThresholdMap& t,
                                  const IncentiveVector& s) {
  validate_thresholds(g, t);
  validate_incentives(g, s);
  std::vector<int> round0, need;
  round0_and_need_from_incentives(g, t, s, round0, need);
  return run_rounds(g, need, std::move(round0));
}

bool is_target_set(const Graph& g, const ThresholdMap& t, const TargetSet& seeds) {
  validate_thresholds(g, t);
  return run_covers(g, t, sorted_unique_seeds(g, seeds));
}

bool is_target_vector(const Graph& g, const ThresholdMap& t, const IncentiveVector& s) {
  validate_thresholds(g, t);
  validate_incentives(g, s);
  std::vector<int> round0, need;
  round0_and_need_from_incentives(g, t, s, round0, need);
  return run_covers(g, need, std::move(round0));
}

long long cost_of_set(const TargetSet& seeds, const CostMap& c) {
  long long total = 0;
  for (int v : seeds) {
    if (v < 0 || v >= static_cast<int>(c.size()))
      throw std::invalid_argument("cost_of_set: vertex out of range");
    total += c[v];
  }
  return total;
}

long long cost_of_vector(const IncentiveVector& s) {
  long long total = 0;
  for (int x : s) total += x;
  return total;
}

}  // namespace spread
