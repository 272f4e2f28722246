#pragma once

#include <vector>

#include "spread/graph.hpp"
#include "spread/thresholds.hpp"

namespace spread {

// A seed set S: vertices activated outright at round 0.
using TargetSet = std::vector<int>;
// Per-vertex incentives s(v) >= 0 lowering thresholds; s(v) >= t(v)
// makes v active at round 0.
using IncentiveVector = std::vector<int>;

// Round-by-round activation record. rounds[l] holds the vertices newly
// activated at round l (rounds[0] = initial actives, possibly empty);
// rounds are disjoint and their union is `active`.
struct DiffusionTrace {
  std::vector<std::vector<int>> rounds;
  std::vector<int> active;  // sorted
  int converged_round = 0;  // last round that added vertices
};

// Runs the activation process: at each round every inactive u with at
// least t(u) active neighbors activates, until nothing changes. Large
// frontiers are expanded in parallel; results are identical either way.
DiffusionTrace diffuse_set(const Graph& g, const ThresholdMap& t, const TargetSet& seeds);

// Same process with per-vertex incentives: round 0 is {v : s(v) >= t(v)}
// and u activates once its active-neighbor count reaches t(u) - s(u).
DiffusionTrace diffuse_incentives(const Graph& g, const ThresholdMap& t,
                                  const IncentiveVector& s);

// True iff the respective diffusion activates every vertex. These take a
// leaner path than the trace-building calls (no round bookkeeping).
bool is_target_set(const Graph& g, const ThresholdMap& t, const TargetSet& seeds);
bool is_target_vector(const Graph& g, const ThresholdMap& t, const IncentiveVector& s);

long long cost_of_set(const TargetSet& seeds, const CostMap& c);
long long cost_of_vector(const IncentiveVector& s);

}  // namespace spread
