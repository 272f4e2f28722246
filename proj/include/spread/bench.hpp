#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spread/graph.hpp"
#include "spread/thresholds.hpp"

namespace spread {

// Deterministic fixture generators.
Graph make_clique(int n);
Graph make_path(int n);
Graph make_star(int n);  // vertex 0 is the center
Graph random_tree(int n, std::uint64_t seed);
Graph random_gnp(int n, double p, std::uint64_t seed);

// Spec strings: clique:7, path:3, star:6, tree:10:seed, gnp:2000:0.005:seed
Graph synth_graph(const std::string& spec);

enum class Algo { Wtss, Tpi, DegreeInt, DiscountInt, DegreeFrac, DiscountFrac };

std::string algo_name(Algo a);
Algo parse_algo(const std::string& name);
const std::vector<Algo>& all_algos();

enum class Regime { Random, Constant, Proportional };

std::string regime_name(Regime r);

struct ExperimentConfig {
  std::string graph_path;  // exactly one of graph_path / synth_spec
  std::string synth_spec;
  std::string network_label;  // defaults to the source string
  Regime regime = Regime::Random;
  std::vector<int> const_params;          // Constant: t values
  std::vector<double> prop_params;        // Proportional: alpha values
  std::vector<std::uint64_t> seeds;       // Random: one threshold draw per seed
  int trials = 1;                         // Constant/Proportional replication
  std::string cost_rule = "t";            // "t" or "file:<path>"
  std::vector<Algo> algos;
  bool check_optimality = true;  // assert tpi/wtss lead on trees and cliques
};

struct ExperimentRecord {
  std::string network;
  std::string algorithm;
  std::string regime;
  std::string parameter;
  std::string seed;       // seed value, trial index, or "mean"
  double cost = 0;        // solution cost; for baselines the minimal budget
  double rounds = 0;      // activation rounds of the verified solution
  double time_ms = 0;     // around the algorithm call only
  double overhead_pct = 0;  // vs wtss (integral) or tpi (fractional)
  bool has_overhead = false;
  bool is_mean = false;

  // sort key parts
  int param_index = 0;
  int trial_index = 0;
  int algo_index = 0;
};

// Runs every (parameter, trial, algorithm) cell: one threshold draw per
// cell shared by all algorithms, every solution re-verified by diffusion
// before it is recorded (failures abort), cells executed in parallel and
// the records sorted before they are returned.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

// Header plus one RFC-4180 line per record; returns bytes written.
std::size_t emit_csv(const std::vector<ExperimentRecord>& records, std::ostream& out);

}  // namespace spread
