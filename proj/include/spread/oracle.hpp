#pragma once

#include <vector>

#include "spread/diffusion.hpp"
#include "spread/graph.hpp"
#include "spread/thresholds.hpp"

namespace spread {

// Exhaustive ground-truth solvers for small instances. Size caps are
// hard errors, not warnings: these exist for tests and spot checks, and
// anything past the caps silently turns into hours of work. Callers
// that know what they are doing can raise the limits explicitly.

struct WtssOracleResult {
  long long cost = 0;
  TargetSet set;
};

struct TpiOracleResult {
  long long cost = 0;
  IncentiveVector incentives;
};

struct TssOracleResult {
  int size = 0;
  TargetSet set;
};

struct TpiOracleLimits {
  int max_vertices = 12;
  long long max_threshold_sum = 30;
};

// Minimum-cost target set by branch and bound over all subsets.
WtssOracleResult brute_force_wtss(const Graph& g, const ThresholdMap& t, const CostMap& c,
                                  int max_vertices = 20);

// Minimum-total target vector by iterative deepening on the total
// incentive, enumerating all vectors 0 <= s(v) <= t(v) of each total.
TpiOracleResult brute_force_tpi(const Graph& g, const ThresholdMap& t,
                                TpiOracleLimits limits = {});

// Minimum-size target set (unit costs), subsets enumerated by size.
TssOracleResult brute_force_tss(const Graph& g, const ThresholdMap& t,
                                int max_vertices = 20);

// Closed form for the optimal incentive total on a tree:
// |V| - 1 - sum_v (d(v) - t(v)). Errors if g is not a connected tree.
long long tree_optimal_cost(const Graph& g, const ThresholdMap& t);

// Replacement structure behind the TSS-to-TPI reduction: vertex v
// becomes a hub v' (keeping v's threshold and its cross edges) joined to
// a collector v'' through d(v) disjoint two-edge paths, all gadget
// vertices at threshold 1.
struct GadgetGraph {
  Graph graph;
  ThresholdMap thresholds;
  std::vector<int> hub;         // hub[v]  = v'
  std::vector<int> collector;   // collector[v] = v''
  std::vector<int> path_first;  // path vertices are path_first[v] .. path_first[v]+d(v)-1
};

// Requires 1 <= t(v) <= d(v) for every vertex.
GadgetGraph build_gadget(const Graph& g, const ThresholdMap& t);

}  // namespace spread
