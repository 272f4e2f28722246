#include "spread/reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace spread::reference {

namespace {

DiffusionTrace run(const Graph& g, const std::vector<int>& residual,
                   std::vector<int> round0) {
  DiffusionTrace trace;
  std::vector<char> active(g.n, 0);
  for (int v : round0) active[v] = 1;
  trace.rounds.push_back(std::move(round0));

  for (;;) {
    std::vector<int> next;
    for (int u = 0; u < g.n; ++u) {
      if (active[u]) continue;
      int got = 0;
      for (int w : g.neighbors(u)) got += active[w];
      if (got >= residual[u]) next.push_back(u);
    }
    if (next.empty()) break;
    for (int v : next) active[v] = 1;
    trace.rounds.push_back(std::move(next));
  }

  trace.converged_round = static_cast<int>(trace.rounds.size()) - 1;
  for (const auto& round : trace.rounds)
    trace.active.insert(trace.active.end(), round.begin(), round.end());
  std::sort(trace.active.begin(), trace.active.end());
  return trace;
}

}  // namespace

DiffusionTrace diffuse_set(const Graph& g, const ThresholdMap& t, const TargetSet& seeds) {
  validate_thresholds(g, t);
  std::vector<int> round0(seeds);
  for (int v : round0)
    if (v < 0 || v >= g.n) throw std::invalid_argument("seed vertex out of range");
  std::sort(round0.begin(), round0.end());
  round0.erase(std::unique(round0.begin(), round0.end()), round0.end());
  return run(g, t, std::move(round0));
}

DiffusionTrace diffuse_incentives(const Graph& g, const ThresholdMap& t,
                                  const IncentiveVector& s) {
  validate_thresholds(g, t);
  if (static_cast<int>(s.size()) != g.n)
    throw std::invalid_argument("incentive vector size does not match vertex count");
  std::vector<int> residual(g.n), round0;
  for (int v = 0; v < g.n; ++v) {
    if (s[v] < 0) throw std::invalid_argument("incentive must be >= 0");
    residual[v] = t[v] - s[v];
    if (residual[v] <= 0) round0.push_back(v);
  }
  return run(g, residual, std::move(round0));
}

}  // namespace spread::reference
