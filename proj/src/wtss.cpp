#include "spread/wtss.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "indexed_heap.hpp"

namespace spread {

namespace {

struct WtssEngine {
  const Graph& g;
  const ThresholdMap& t;
  const CostMap& c;
  std::vector<char> alive;
  std::vector<int> delta;  // surviving degree
  std::vector<int> k;      // residual threshold
  // Case-1/2 candidates picked by smallest id; entries are revalidated
  // against the current state when popped, so stale duplicates are fine.
  std::priority_queue<int, std::vector<int>, std::greater<int>> zero_threshold;
  std::priority_queue<int, std::vector<int>, std::greater<int>> starved;

  WtssEngine(const Graph& g_, const ThresholdMap& t_, const CostMap& c_)
      : g(g_), t(t_), c(c_), alive(g_.n, 1), delta(g_.n), k(t_) {}

  std::uint64_t ratio_num(int v) const {
    return static_cast<std::uint64_t>(c[v]) * static_cast<std::uint64_t>(k[v]);
  }
  std::uint64_t ratio_den(int v) const {
    return static_cast<std::uint64_t>(delta[v]) * (static_cast<std::uint64_t>(delta[v]) + 1);
  }

  WtssResult run(bool record_steps) {
    auto better = [this](int a, int b) {
      std::uint64_t na = ratio_num(a), da = ratio_den(a);
      std::uint64_t nb = ratio_num(b), db = ratio_den(b);
      if (ratio_greater(na, da, nb, db)) return true;
      if (ratio_greater(nb, db, na, da)) return false;
      return a < b;
    };
    IndexedMaxHeap<decltype(better)> deferral(g.n, better);

    for (int v = 0; v < g.n; ++v) delta[v] = g.degree(v);
    for (int v = 0; v < g.n; ++v) {
      if (delta[v] < k[v]) starved.push(v);
      deferral.push(v);
    }

    WtssResult result;
    if (record_steps) result.steps.reserve(g.n);

    auto drop_threshold = [&](int u, bool floor_at_zero) {
      if (floor_at_zero && k[u] == 0) return;
      if (k[u] == 0)
        throw std::logic_error("wtss: residual threshold underflow at vertex " +
                               std::to_string(u));
      if (--k[u] == 0) zero_threshold.push(u);
      deferral.update(u);
    };

    for (int remaining = g.n; remaining > 0; --remaining) {
      int v = -1;
      PeelCase kind;
      while (!zero_threshold.empty()) {
        int u = zero_threshold.top();
        if (alive[u] && k[u] == 0) {
          v = u;
          break;
        }
        zero_threshold.pop();
      }
      if (v >= 0) {
        kind = PeelCase::Activated;
        for (int u : g.neighbors(v))
          if (alive[u]) drop_threshold(u, true);
      } else {
        while (!starved.empty()) {
          int u = starved.top();
          if (alive[u] && k[u] > 0 && delta[u] < k[u]) {
            v = u;
            break;
          }
          starved.pop();
        }
        if (v >= 0) {
          kind = PeelCase::Purchased;
          result.set.push_back(v);
          result.cost += c[v];
          for (int u : g.neighbors(v))
            if (alive[u]) drop_threshold(u, false);
        } else {
          v = deferral.top();
          kind = PeelCase::Deferred;
          if (k[v] == 0 || delta[v] < k[v])
            throw std::logic_error("wtss: case ordering violated at vertex " +
                                   std::to_string(v));
        }
      }

      alive[v] = 0;
      deferral.erase(v);
      for (int u : g.neighbors(v)) {
        if (!alive[u]) continue;
        --delta[u];
        if (delta[u] < k[u]) starved.push(u);
        deferral.update(u);
      }
      if (record_steps) result.steps.push_back({v, kind});
    }

    std::sort(result.set.begin(), result.set.end());
    return result;
  }
};

}  // namespace

TargetSet wtss(const Graph& g, const ThresholdMap& t, const CostMap& c) {
  validate_thresholds(g, t);
  validate_costs(g, c);
  return WtssEngine(g, t, c).run(false).set;
}

WtssResult wtss_trace(const Graph& g, const ThresholdMap& t, const CostMap& c) {
  validate_thresholds(g, t);
  validate_costs(g, c);
  return WtssEngine(g, t, c).run(true);
}

}  // namespace spread
