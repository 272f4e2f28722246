#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "spread/bench.hpp"
#include "spread/diffusion.hpp"
#include "spread/thresholds.hpp"
#include "spread/tpi.hpp"

using namespace spread;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
    } else {
      field += ch;
    }
  }
  return rows;
}

}  // namespace

TEST_CASE("synthetic graphs") {
  Graph k7 = synth_graph("clique:7");
  CHECK(k7.n == 7);
  CHECK(k7.m == 21);

  Graph p3 = synth_graph("path:3");
  CHECK(p3.m == 2);
  CHECK(p3.degree(1) == 2);

  Graph star = synth_graph("star:6");
  CHECK(star.degree(0) == 5);

  Graph a = synth_graph("gnp:50:0.3:9");
  Graph b = random_gnp(50, 0.3, 9);
  CHECK(a.nbr == b.nbr);

  CHECK_THROWS_AS(synth_graph("torus:5"), std::invalid_argument);
  CHECK_THROWS_AS(synth_graph("clique:5:9"), std::invalid_argument);
}

TEST_CASE("random trees are trees, uniformly spread") {
  // every labeled tree on 4 vertices (16 of them) should show up
  std::vector<std::vector<int>> seen;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    Graph g = random_tree(4, seed);
    REQUIRE(g.m == 3);
    std::vector<char> vis(4, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (!vis[u]) {
          vis[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    REQUIRE(count == 4);
    if (std::find(seen.begin(), seen.end(), g.nbr) == seen.end()) seen.push_back(g.nbr);
  }
  CHECK(seen.size() == 16);

  Graph big = random_tree(500, 3);
  CHECK(big.m == 499);
}

TEST_CASE("run_experiment on the k7 fixture") {
  ExperimentConfig config;
  config.synth_spec = "clique:7";
  config.regime = Regime::Constant;
  config.const_params = {6};
  config.algos = {Algo::Tpi};

  auto records = run_experiment(config);
  REQUIRE(records.size() == 1);
  CHECK(records[0].algorithm == "tpi");
  CHECK(records[0].parameter == "6");

  Graph g = make_clique(7);
  ThresholdMap t = constant_thresholds(g, 6);
  CHECK(records[0].cost == static_cast<double>(cost_of_vector(tpi(g, t))));
}

TEST_CASE("identical seeds give identical records") {
  ExperimentConfig config;
  config.synth_spec = "gnp:40:0.2:5";
  config.regime = Regime::Random;
  config.seeds = {11, 12, 13};
  config.algos = {Algo::Wtss, Algo::Tpi, Algo::DiscountFrac};

  auto a = run_experiment(config);
  auto b = run_experiment(config);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].algorithm == b[i].algorithm);
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].cost == b[i].cost);
    CHECK(a[i].rounds == b[i].rounds);
  }
}

TEST_CASE("empty algorithm list is rejected") {
  ExperimentConfig config;
  config.synth_spec = "clique:5";
  config.regime = Regime::Constant;
  config.const_params = {2};
  CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);
}

TEST_CASE("csv emission") {
  std::ostringstream empty;
  size_t bytes = emit_csv({}, empty);
  CHECK(empty.str() ==
        "network,algorithm,regime,parameter,seed,cost,rounds,time_ms,overhead_pct\n");
  CHECK(bytes == empty.str().size());

  ExperimentConfig config;
  config.synth_spec = "gnp:30:0.25:4";
  config.network_label = "fixture, with comma";
  config.regime = Regime::Random;
  config.seeds = {5, 6};
  config.algos = {Algo::Tpi, Algo::DiscountFrac};

  auto records = run_experiment(config);
  std::ostringstream out;
  emit_csv(records, out);
  auto rows = parse_csv(out.str());

  REQUIRE(rows.size() == records.size() + 1);
  CHECK(rows[0][0] == "network");
  for (size_t i = 0; i < records.size(); ++i) {
    CHECK(rows[i + 1][0] == records[i].network);
    CHECK(rows[i + 1][1] == records[i].algorithm);
    CHECK(rows[i + 1][4] == records[i].seed);
    CHECK(std::stod(rows[i + 1][5]) == doctest::Approx(records[i].cost));
  }

  // the reference algorithm carries zero overhead
  for (size_t i = 0; i < records.size(); ++i)
    if (records[i].algorithm == "tpi") {
      CHECK(records[i].has_overhead);
      CHECK(records[i].overhead_pct == 0.0);
    }

  // mean rows are appended for multi-seed random runs
  CHECK(rows[rows.size() - 1][4] == "mean");
}

TEST_CASE("harness asserts reference optimality on trees") {
  ExperimentConfig config;
  config.synth_spec = "tree:30:7";
  config.regime = Regime::Random;
  config.seeds = {1, 2};
  config.algos = {Algo::Tpi, Algo::DegreeFrac, Algo::DiscountFrac};
  auto records = run_experiment(config);
  double tpi_cost = -1;
  for (const auto& rec : records)
    if (rec.algorithm == "tpi" && rec.seed == "1") tpi_cost = rec.cost;
  for (const auto& rec : records)
    if (rec.seed == "1") CHECK(rec.cost >= tpi_cost);
}
