// Compares the production diffusion kernel (counter-based, OpenMP
// frontier expansion) against the serial reference engine, and times the
// two peeling algorithms, across graph sizes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "spread/bench.hpp"
#include "spread/diffusion.hpp"
#include "spread/reference.hpp"
#include "spread/rng.hpp"
#include "spread/thresholds.hpp"
#include "spread/tpi.hpp"
#include "spread/wtss.hpp"

using namespace spread;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    f();
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    best = std::min(best, ms);
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<long long> sizes = {10000, 100000, 1000000};
  if (argc > 1) {
    sizes.clear();
    for (int i = 1; i < argc; ++i) sizes.push_back(std::stoll(argv[i]));
  }

  std::printf("%10s %10s %12s %14s %10s %10s %10s\n", "edges", "vertices",
              "ref_ms", "kernel_ms", "speedup", "wtss_ms", "tpi_ms");
  for (long long target_m : sizes) {
    // average degree 10
    int n = static_cast<int>(std::max<long long>(target_m / 5, 4));
    double p = 10.0 / (n - 1);
    Graph g = random_gnp(n, p, 42);
    ThresholdMap t = random_thresholds(g, 7);
    CostMap c = costs_equal_thresholds(t);

    // seed a 2% random sample outright; low random thresholds make the
    // cascade sweep most of the graph
    IncentiveVector seeds_inc(g.n, 0);
    Rng rng(3);
    for (int i = 0; i < g.n / 50 + 1; ++i) {
      int v = static_cast<int>(rng.below(static_cast<std::uint32_t>(g.n)));
      seeds_inc[v] = t[v];
    }
    int reps = g.m >= 500000 ? 3 : 5;

    DiffusionTrace ref_trace, kernel_trace;
    double ref_ms =
        best_of(reps, [&] { ref_trace = reference::diffuse_incentives(g, t, seeds_inc); });
    double kernel_ms =
        best_of(reps, [&] { kernel_trace = diffuse_incentives(g, t, seeds_inc); });
    if (ref_trace.active != kernel_trace.active ||
        ref_trace.rounds != kernel_trace.rounds) {
      std::fprintf(stderr, "engines disagree at m=%lld\n", g.m);
      return 1;
    }

    double wtss_ms = best_of(reps, [&] { (void)wtss(g, t, c); });
    double tpi_ms = best_of(reps, [&] { (void)tpi(g, t); });

    std::printf("%10lld %10d %12.2f %14.2f %9.2fx %10.2f %10.2f\n", g.m, g.n, ref_ms,
                kernel_ms, ref_ms / kernel_ms, wtss_ms, tpi_ms);
  }
  return 0;
}
