#include <doctest.h>

#include <algorithm>

#include "spread/baselines.hpp"
#include "spread/bench.hpp"
#include "spread/diffusion.hpp"
#include "spread/oracle.hpp"
#include "spread/rng.hpp"
#include "spread/thresholds.hpp"
#include "spread/tpi.hpp"

using namespace spread;

TEST_CASE("degree_int walks the degree order within budget") {
  Graph g = make_clique(7);
  ThresholdMap t{1, 1, 1, 1, 1, 6, 6};
  CostMap c = costs_equal_thresholds(t);
  CHECK(degree_int(g, t, c, 0).empty());
  // equal degrees: id order; the two cost-6 vertices no longer fit
  CHECK(degree_int(g, t, c, 6) == TargetSet{0, 1, 2, 3, 4});

  Graph star = make_star(5);
  ThresholdMap ts = constant_thresholds(star, 2);
  CostMap cs(5, 1);
  CHECK(degree_int(star, ts, cs, 1) == TargetSet{0});
}

TEST_CASE("discount_int steers away from covered centers") {
  // star centers 0 and 2 overlap; center 1 is independent of both
  Graph g = build_graph(12, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {2, 6}, {2, 7}, {2, 8},
                             {1, 9}, {1, 10}, {1, 11}});
  ThresholdMap t = constant_thresholds(g, 2);
  CostMap c(12, 1);
  // after taking 0, the working degree of 2 drops and 1 wins the tie
  CHECK(discount_int(g, t, c, 2) == TargetSet{0, 1});
  CHECK(degree_int(g, t, c, 2) == TargetSet{0, 2});

  CHECK(discount_int(g, t, c, 0).empty());
  Graph solo = build_graph(1, {});
  CHECK(discount_int(solo, {1}, {3}, 2).empty());
  CHECK(discount_int(solo, {1}, {3}, 3) == TargetSet{0});
}

TEST_CASE("degree_frac splits the budget by degree") {
  Graph g = random_gnp(20, 0.3, 2);
  ThresholdMap t = random_thresholds(g, 3);
  IncentiveVector s = degree_frac(g, t, 2 * g.m);
  for (int v = 0; v < g.n; ++v) CHECK(s[v] == g.degree(v));

  Graph k7 = make_clique(7);
  ThresholdMap t7(7, 1);
  IncentiveVector one = degree_frac(k7, t7, 1);
  CHECK(one[0] == 1);
  CHECK(cost_of_vector(one) == 1);

  CHECK(cost_of_vector(degree_frac(k7, t7, 0)) == 0);

  Graph edgeless = build_graph(3, {});
  CHECK_THROWS_AS(degree_frac(edgeless, {1, 1, 1}, 5), std::invalid_argument);
}

TEST_CASE("discount_frac grants exactly what activation needs") {
  Graph k7 = make_clique(7);
  ThresholdMap t{1, 1, 1, 1, 1, 6, 6};
  IncentiveVector s = discount_frac(k7, t, 2);
  CHECK(s[0] == 1);  // first pick: highest degree, id tie-break, needs t - 0
  CHECK(cost_of_vector(s) <= 2);

  long long total_t = 0;
  for (int x : t) total_t += x;
  IncentiveVector all = discount_frac(k7, t, total_t);
  CHECK(is_target_vector(k7, t, all));

  CHECK(cost_of_vector(discount_frac(k7, t, 0)) == 0);
}

TEST_CASE("budgets are never exceeded") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_gnp(25, 0.2, rng.next());
    if (g.m == 0) continue;
    ThresholdMap t = random_thresholds(g, rng.next());
    CostMap c = costs_equal_thresholds(t);
    long long beta = rng.below(40);
    CHECK(cost_of_set(degree_int(g, t, c, beta), c) <= beta);
    CHECK(cost_of_set(discount_int(g, t, c, beta), c) <= beta);
    CHECK(cost_of_vector(degree_frac(g, t, beta)) <= beta);
    CHECK(cost_of_vector(discount_frac(g, t, beta)) <= beta);
  }
}

TEST_CASE("min_budget finds a verified minimal point") {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_gnp(18, 0.3, rng.next());
    if (g.m == 0) continue;
    ThresholdMap t = random_thresholds(g, rng.next());
    CostMap c = costs_equal_thresholds(t);
    long long total_t = 0;
    for (int x : t) total_t += x;

    for (Heuristic h : {Heuristic::DegreeInt, Heuristic::DiscountInt,
                        Heuristic::DegreeFrac, Heuristic::DiscountFrac}) {
      MinBudgetResult r = min_budget(h, g, t, &c);
      CHECK(r.beta >= 1);
      if (h == Heuristic::DiscountFrac) CHECK(r.beta <= total_t);
      if (r.fractional) {
        CHECK(is_target_vector(g, t, r.incentives));
        CHECK(cost_of_vector(r.incentives) <= r.beta);
      } else {
        CHECK(is_target_set(g, t, r.set));
        CHECK(cost_of_set(r.set, c) <= r.beta);
      }
    }
  }
}

TEST_CASE("min_budget never beats the exact optimum") {
  Rng rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = random_gnp(10, 0.35, rng.next());
    bool no_isolated = g.m > 0;
    for (int v = 0; v < g.n && no_isolated; ++v) no_isolated = g.degree(v) >= 1;
    if (!no_isolated) continue;  // degree-frac cannot reach isolated vertices
    ThresholdMap t = random_thresholds(g, rng.next());
    CostMap c = costs_equal_thresholds(t);
    long long best_set_cost = brute_force_wtss(g, t, c).cost;
    long long best_vec_cost = brute_force_tpi(g, t, {12, 100}).cost;
    CHECK(min_budget(Heuristic::DegreeInt, g, t, &c).beta >= best_set_cost);
    CHECK(min_budget(Heuristic::DiscountInt, g, t, &c).beta >= best_set_cost);
    CHECK(min_budget(Heuristic::DegreeFrac, g, t).beta >= best_vec_cost);
    CHECK(min_budget(Heuristic::DiscountFrac, g, t).beta >= best_vec_cost);
  }
}

TEST_CASE("fractional heuristics lower-bounded by tpi on cliques") {
  Graph g = make_clique(7);
  ThresholdMap t(7, 1);
  t[5] = t[6] = 6;
  long long tpi_cost = cost_of_vector(tpi(g, t));
  CHECK(tpi_cost == 2);
  CHECK(min_budget(Heuristic::DegreeFrac, g, t).beta >= tpi_cost);
  CHECK(min_budget(Heuristic::DiscountFrac, g, t).beta >= tpi_cost);
}

TEST_CASE("min_budget requires costs for integral heuristics") {
  Graph g = make_path(3);
  ThresholdMap t{1, 1, 1};
  CHECK_THROWS_AS(min_budget(Heuristic::DegreeInt, g, t, nullptr),
                  std::invalid_argument);
}
