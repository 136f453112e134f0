#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spa/generator.hpp"
#include "spa/instance.hpp"

namespace spa {

enum class BenchAlgo { greedy, generous, mincost };

const char* to_string(BenchAlgo algo);

enum class SweepParam { n1, R, popularity, tie_density };

const char* to_string(SweepParam param);

// One row per (instance, algorithm).
struct RunReport {
  SweepParam param = SweepParam::n1;
  double value = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  BenchAlgo algo = BenchAlgo::greedy;
  int size = 0;
  int degree = 0;
  std::int64_t cost = 0;
  Profile profile;
  double elapsed_s = 0.0;
};

struct SweepConfig {
  SweepParam param = SweepParam::n1;
  std::vector<double> values;  // ascending
  int trials = 1;
  std::vector<BenchAlgo> algos = {BenchAlgo::greedy, BenchAlgo::generous,
                                  BenchAlgo::mincost};
  std::uint64_t master_seed = 1;
  GenConfig base = GenConfig::defaults_for(100);  // overridden per swept value
};

// Runs trials x values x algorithms. Each cell's instance is generated from
// mix_seed(master, param, value, trial), so any cell reproduces in
// isolation. After solving a cell, cross-algorithm order properties are
// asserted (equal sizes and the maximum-flow value, first-choice dominance
// of greedy, degree dominance of generous, cost minimality of mincost);
// failures abort with the offending seed in the message.
std::vector<RunReport> sweep(const SweepConfig& config);

// CSV per the schema param,value,trial,seed,algo,size,degree,cost,profile,
// elapsed_s with the profile as x1|x2|...|xR. Mean rows per (value, algo)
// are appended with trial=mean.
std::string reports_to_csv(const std::vector<RunReport>& reports,
                           bool with_aggregates = true);

// Per-rank percentage of matched students plus mean cost, per algorithm,
// averaged over all reports (which should share a configuration).
struct BreakdownRow {
  BenchAlgo algo = BenchAlgo::greedy;
  std::vector<double> rank_percent;
  double mean_cost = 0.0;
};

std::vector<BreakdownRow> profile_breakdown(const std::vector<RunReport>& reports);

std::string breakdown_to_string(const std::vector<BreakdownRow>& rows);

}  // namespace spa
