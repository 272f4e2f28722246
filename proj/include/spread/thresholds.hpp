#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "spread/graph.hpp"

namespace spread {

// t(v) >= 1: number of active neighbors vertex v needs before it adopts.
using ThresholdMap = std::vector<int>;
// c(v) >= 0: price of seeding vertex v directly.
using CostMap = std::vector<int>;

// t(v) uniform on {1,...,d(v)}; degree <= 1 forces t(v) = 1.
ThresholdMap random_thresholds(const Graph& g, std::uint64_t seed);

// t(v) = min(t, d(v)), floored at 1 for degree-0 vertices.
ThresholdMap constant_thresholds(const Graph& g, int t);

// t(v) = max(1, round-half-up(alpha * d(v))), 0 < alpha < 1.
ThresholdMap proportional_thresholds(const Graph& g, double alpha);

CostMap costs_equal_thresholds(const ThresholdMap& t);

enum class ValueKind { Threshold, Cost };

// "id value" per line, ids in the original (pre-remap) space. Every
// vertex must appear exactly once.
std::vector<int> load_value_file(std::istream& in, const Graph& g, ValueKind kind);
void emit_value_file(std::ostream& out, const Graph& g, const std::vector<int>& values);

void validate_thresholds(const Graph& g, const ThresholdMap& t);
void validate_costs(const Graph& g, const CostMap& c);

}  // namespace spread
