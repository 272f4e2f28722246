#pragma once

#include "spread/diffusion.hpp"

namespace spread::reference {

// Serial reference engine: recomputes each round from scratch by
// counting active neighbors, a direct transcription of the round rule.
// O(rounds * (n + m)); used by tests and the benchmark as the ground
// truth the production kernel is checked against.
DiffusionTrace diffuse_set(const Graph& g, const ThresholdMap& t, const TargetSet& seeds);
DiffusionTrace diffuse_incentives(const Graph& g, const ThresholdMap& t,
                                  const IncentiveVector& s);

}  // namespace spread::reference
