#pragma once

#include <string>
#include <vector>

#include "spread/diffusion.hpp"
#include "spread/graph.hpp"
#include "spread/thresholds.hpp"

namespace spread {

// Budgeted competitor heuristics. The integral pair returns seed sets
// whose total cost stays within beta; the fractional pair spreads beta
// as incentives. None of them is guaranteed to reach full activation at
// a given beta; min_budget searches for the smallest beta that does.

// Vertices in descending degree order (id tie-break); skip any whose
// cost would overshoot the budget and keep trying cheaper candidates.
TargetSet degree_int(const Graph& g, const ThresholdMap& t, const CostMap& c,
                     long long beta);

// Same, but each selection lowers the working degree of its neighbors.
TargetSet discount_int(const Graph& g, const ThresholdMap& t, const CostMap& c,
                       long long beta);

// s(v) = floor(d(v) * beta / 2m); whatever remains of beta is handed out
// one unit apiece in descending degree order. Requires m >= 1.
IncentiveVector degree_frac(const Graph& g, const ThresholdMap& t, long long beta);

// Repeatedly take the highest working-degree unselected vertex and give
// it exactly the incentive that activates it next to the already
// selected neighbors; a vertex that would overshoot the budget gets the
// remainder and the scan stops.
IncentiveVector discount_frac(const Graph& g, const ThresholdMap& t, long long beta);

enum class Heuristic { DegreeInt, DiscountInt, DegreeFrac, DiscountFrac };

bool is_fractional(Heuristic h);
std::string heuristic_name(Heuristic h);

struct MinBudgetResult {
  long long beta = 0;
  bool fractional = false;
  TargetSet set;               // integral heuristics
  IncentiveVector incentives;  // fractional heuristics
};

// Smallest budget at which the heuristic fully activates the graph:
// binary search over [0, sum of min(t, c)] followed by a downward scan,
// which pins the answer even when feasibility is not monotone in beta.
// Integral heuristics require a cost map.
MinBudgetResult min_budget(Heuristic h, const Graph& g, const ThresholdMap& t,
                           const CostMap* c = nullptr);

}  // namespace spread
