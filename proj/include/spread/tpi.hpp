#pragma once

#include <vector>

#include "spread/diffusion.hpp"
#include "spread/graph.hpp"
#include "spread/thresholds.hpp"

namespace spread {

enum class TpiCase : int {
  Subsidized = 1,  // residual threshold exceeded surviving degree: incentive granted
  Pruned = 2,      // ratio argmax: removed, to be activated by surviving neighbors
};

struct TpiStep {
  int vertex;
  TpiCase kind;
  int sigma;  // incentive added this iteration (0 for case 2)
};

struct TpiResult {
  IncentiveVector incentives;
  long long cost = 0;
  std::vector<TpiStep> steps;
};

// Peeling heuristic for minimum-total partial incentives. While vertices
// survive: if some v has k(v) > delta(v), grant it k(v) - delta(v) of
// incentive and clamp k(v) to delta(v), removing v once both hit zero
// (case 1); otherwise remove the maximizer of
// k(u)(k(u)+1) / (delta(u)(delta(u)+1)) (case 2). A vertex can collect
// incentives several times before it is removed. Smallest-id tie-breaks
// and exact integer ratio comparisons make the run deterministic.
IncentiveVector tpi(const Graph& g, const ThresholdMap& t);
TpiResult tpi_trace(const Graph& g, const ThresholdMap& t);

}  // namespace spread
