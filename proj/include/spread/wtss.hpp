#pragma once

#include <vector>

#include "spread/diffusion.hpp"
#include "spread/graph.hpp"
#include "spread/thresholds.hpp"

namespace spread {

// Why a vertex left the surviving graph during peeling.
enum class PeelCase : int {
  Activated = 1,  // residual threshold hit 0: neighbors outside U activate it
  Purchased = 2,  // fewer surviving neighbors than residual threshold: bought
  Deferred = 3,   // ratio argmax: left to be activated by surviving neighbors
};

struct WtssStep {
  int vertex;
  PeelCase kind;
};

struct WtssResult {
  TargetSet set;
  long long cost = 0;
  std::vector<WtssStep> steps;  // one entry per iteration, n in total
};

// Peeling heuristic for minimum-cost target sets. Repeatedly removes a
// vertex from the surviving graph: one whose residual threshold reached
// zero (case 1), else one that can no longer be activated from inside
// and must be purchased (case 2), else the maximizer of
// c(u)k(u) / (delta(u)(delta(u)+1)) (case 3). Ties break on smallest id
// and ratios are compared in exact integer arithmetic, so the output is
// deterministic. Runs in O(m log n).
TargetSet wtss(const Graph& g, const ThresholdMap& t, const CostMap& c);
WtssResult wtss_trace(const Graph& g, const ThresholdMap& t, const CostMap& c);

}  // namespace spread
