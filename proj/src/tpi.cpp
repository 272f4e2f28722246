#include "spread/tpi.hpp"

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>

#include "indexed_heap.hpp"

namespace spread {

namespace {

struct PruneEntry {
  std::uint64_t num;  // k(k+1) at push time
  std::uint64_t den;  // delta(delta+1) at push time
  int vertex;

  bool operator<(const PruneEntry& other) const {
    // priority_queue keeps the largest on top
    if (ratio_greater(num, den, other.num, other.den)) return false;
    if (ratio_greater(other.num, other.den, num, den)) return true;
    return vertex > other.vertex;
  }
};

struct TpiEngine {
  const Graph& g;
  std::vector<char> alive;
  std::vector<int> delta;
  std::vector<int> k;
  std::vector<int> s;
  // Case-1 candidates by smallest id; prune candidates in a lazy heap
  // whose entries are revalidated against the current (k, delta) on pop.
  std::priority_queue<int, std::vector<int>, std::greater<int>> oversubscribed;
  std::priority_queue<PruneEntry> prunable;
  bool thresholds_within_degree = true;

  explicit TpiEngine(const Graph& g_, const ThresholdMap& t)
      : g(g_), alive(g_.n, 1), delta(g_.n), k(t), s(g_.n, 0) {}

  std::uint64_t ratio_num(int v) const {
    return static_cast<std::uint64_t>(k[v]) * (static_cast<std::uint64_t>(k[v]) + 1);
  }
  std::uint64_t ratio_den(int v) const {
    return static_cast<std::uint64_t>(delta[v]) * (static_cast<std::uint64_t>(delta[v]) + 1);
  }

  void push_prune(int v) { prunable.push({ratio_num(v), ratio_den(v), v}); }

  TpiResult run(bool record_steps) {
    for (int v = 0; v < g.n; ++v) {
      delta[v] = g.degree(v);
      if (k[v] > delta[v]) {
        oversubscribed.push(v);
        thresholds_within_degree = false;
      }
    }
    for (int v = 0; v < g.n; ++v) push_prune(v);

    TpiResult result;
    int remaining = g.n;
    while (remaining > 0) {
      int v = -1;
      while (!oversubscribed.empty()) {
        int u = oversubscribed.top();
        if (alive[u] && k[u] > delta[u]) {
          v = u;
          break;
        }
        oversubscribed.pop();
      }

      if (v >= 0) {
        int sigma = k[v] - delta[v];
        if (thresholds_within_degree && sigma != 1)
          throw std::logic_error("tpi: case-1 increment " + std::to_string(sigma) +
                                 " at vertex " + std::to_string(v));
        s[v] += sigma;
        result.cost += sigma;
        k[v] = delta[v];
        if (k[v] == 0) {
          alive[v] = 0;
          --remaining;
        } else {
          push_prune(v);
        }
        if (record_steps) result.steps.push_back({v, TpiCase::Subsidized, sigma});
        continue;
      }

      for (;;) {
        if (prunable.empty())
          throw std::logic_error("tpi: no prune candidate with vertices remaining");
        PruneEntry e = prunable.top();
        prunable.pop();
        if (alive[e.vertex] && e.num == ratio_num(e.vertex) && e.den == ratio_den(e.vertex)) {
          v = e.vertex;
          break;
        }
      }
      if (k[v] > delta[v])
        throw std::logic_error("tpi: case ordering violated at vertex " + std::to_string(v));
      alive[v] = 0;
      --remaining;
      for (int u : g.neighbors(v)) {
        if (!alive[u]) continue;
        --delta[u];
        if (k[u] > delta[u]) oversubscribed.push(u);
        push_prune(u);
      }
      if (record_steps) result.steps.push_back({v, TpiCase::Pruned, 0});
    }

    result.incentives = std::move(s);
    return result;
  }
};

}  // namespace

IncentiveVector tpi(const Graph& g, const ThresholdMap& t) {
  validate_thresholds(g, t);
  return TpiEngine(g, t).run(false).incentives;
}

TpiResult tpi_trace(const Graph& g, const ThresholdMap& t) {
  validate_thresholds(g, t);
  return TpiEngine(g, t).run(true);
}

}  // namespace spread
