#include "spread/thresholds.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "spread/rng.hpp"

namespace spread {

ThresholdMap random_thresholds(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  ThresholdMap t(g.n);
  for (int v = 0; v < g.n; ++v) {
    int d = g.degree(v);
    t[v] = d <= 1 ? 1 : 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(d)));
  }
  return t;
}

ThresholdMap constant_thresholds(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("constant_thresholds: t must be >= 1");
  ThresholdMap out(g.n);
  for (int v = 0; v < g.n; ++v) out[v] = std::max(1, std::min(t, g.degree(v)));
  return out;
}

ThresholdMap proportional_thresholds(const Graph& g, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("proportional_thresholds: alpha must be in (0,1)");
  // Half-up rounding done in exact integer arithmetic on alpha as a
  // rational with denominator 1e9, so ties like 0.5 * 7 land the same
  // way on every platform.
  const long long den = 1000000000LL;
  const long long num = std::llround(alpha * static_cast<double>(den));
  ThresholdMap out(g.n);
  for (int v = 0; v < g.n; ++v) {
    long long d = g.degree(v);
    long long rounded = (2 * num * d + den) / (2 * den);
    out[v] = static_cast<int>(std::max(1LL, rounded));
  }
  return out;
}

CostMap costs_equal_thresholds(const ThresholdMap& t) { return t; }

std::vector<int> load_value_file(std::istream& in, const Graph& g, ValueKind kind) {
  std::unordered_map<std::uint64_t, int> dense;
  dense.reserve(g.n);
  for (int v = 0; v < g.n; ++v) dense.emplace(g.original_id[v], v);

  std::vector<int> out(g.n, 0);
  std::vector<char> seen(g.n, 0);
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size() || line[i] == '#') continue;

    std::istringstream ls(line);
    std::uint64_t raw;
    long long value;
    if (!(ls >> raw >> value))
      throw std::runtime_error("value file line " + std::to_string(line_no) +
                               ": expected 'id value'");
    auto it = dense.find(raw);
    if (it == dense.end())
      throw std::runtime_error("value file line " + std::to_string(line_no) +
                               ": unknown vertex id " + std::to_string(raw));
    int v = it->second;
    if (seen[v])
      throw std::runtime_error("value file line " + std::to_string(line_no) +
                               ": duplicate vertex id " + std::to_string(raw));
    seen[v] = 1;
    long long lo = kind == ValueKind::Threshold ? 1 : 0;
    if (value < lo || value > INT32_MAX)
      throw std::runtime_error("value file line " + std::to_string(line_no) +
                               ": value " + std::to_string(value) + " out of range");
    out[v] = static_cast<int>(value);
  }
  for (int v = 0; v < g.n; ++v)
    if (!seen[v])
      throw std::runtime_error("value file: missing vertex id " +
                               std::to_string(g.original_id[v]));
  return out;
}

void emit_value_file(std::ostream& out, const Graph& g, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != g.n)
    throw std::invalid_argument("emit_value_file: size mismatch");
  for (int v = 0; v < g.n; ++v) out << g.original_id[v] << ' ' << values[v] << '\n';
}

void validate_thresholds(const Graph& g, const ThresholdMap& t) {
  if (static_cast<int>(t.size()) != g.n)
    throw std::invalid_argument("threshold map size does not match vertex count");
  for (int v = 0; v < g.n; ++v)
    if (t[v] < 1)
      throw std::invalid_argument("threshold of vertex " + std::to_string(v) +
                                  " must be >= 1");
}

void validate_costs(const Graph& g, const CostMap& c) {
  if (static_cast<int>(c.size()) != g.n)
    throw std::invalid_argument("cost map size does not match vertex count");
  for (int v = 0; v < g.n; ++v)
    if (c[v] < 0)
      throw std::invalid_argument("cost of vertex " + std::to_string(v) +
                                  " must be >= 0");
}

}  // namespace spread
