#include "spa/bench.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "spa/errors.hpp"
#include "spa/mcmf.hpp"
#include "spa/rng.hpp"
#include "spa/solver.hpp"

namespace spa {

namespace {

GenConfig config_for(const SweepConfig& sweep_config, double value) {
  GenConfig c = sweep_config.base;
  switch (sweep_config.param) {
    case SweepParam::n1: {
      c = GenConfig::defaults_for(static_cast<int>(value));
      c.r_min = sweep_config.base.r_min;
      c.r_max = sweep_config.base.r_max;
      c.popularity = sweep_config.base.popularity;
      c.tie_density = sweep_config.base.tie_density;
      break;
    }
    case SweepParam::R:
      c.r_min = c.r_max = static_cast<int>(value);
      break;
    case SweepParam::popularity:
      c.popularity = value;
      break;
    case SweepParam::tie_density:
      c.tie_density = value;
      break;
  }
  return c;
}

SolveResult run_algo(const SpaInstance& instance, BenchAlgo algo) {
  switch (algo) {
    case BenchAlgo::greedy: return greedy_max(instance);
    case BenchAlgo::generous: return generous_max(instance);
    case BenchAlgo::mincost:
      return solve_mcmf(instance, CostScheme::rank, ArithmeticMode::exact);
  }
  throw ContractError("unknown benchmark algorithm");
}

// Cross-algorithm sanity for one instance; throws with the seed on failure.
void check_cell(const SpaInstance& instance, std::uint64_t seed,
                const std::vector<std::pair<BenchAlgo, SolveResult>>& results) {
  auto fail = [&](const std::string& why) {
    throw InternalError("benchmark invariant failed (seed " +
                        std::to_string(seed) + "): " + why);
  };
  FlowNetwork network(instance);
  const int maximum = max_matching_size(network);
  const SolveResult* greedy = nullptr;
  const SolveResult* generous = nullptr;
  const SolveResult* mincost = nullptr;
  for (const auto& [algo, result] : results) {
    if (result.stats.size != maximum) {
      fail(std::string(to_string(algo)) + " size " +
           std::to_string(result.stats.size) + " != max-flow value " +
           std::to_string(maximum));
    }
    if (algo == BenchAlgo::greedy) greedy = &result;
    if (algo == BenchAlgo::generous) generous = &result;
    if (algo == BenchAlgo::mincost) mincost = &result;
  }
  if (greedy && generous) {
    if (greedy->stats.profile.values.front() <
        generous->stats.profile.values.front()) {
      fail("greedy first-choice count below generous");
    }
    if (generous->stats.degree > greedy->stats.degree) {
      fail("generous degree above greedy");
    }
  }
  if (mincost && greedy && mincost->stats.cost > greedy->stats.cost) {
    fail("mincost cost above greedy");
  }
  if (mincost && generous && mincost->stats.cost > generous->stats.cost) {
    fail("mincost cost above generous");
  }
}

std::string format_double(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

std::string profile_csv(const Profile& profile) {
  std::ostringstream out;
  for (std::size_t r = 0; r < profile.values.size(); ++r) {
    if (r > 0) out << '|';
    out << profile.values[r];
  }
  return out.str();
}

std::string value_csv(double value) {
  // Swept values are small integers or short decimals; print compactly.
  if (value == std::floor(value) && std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  std::ostringstream out;
  out << value;
  return out.str();
}

}  // namespace

const char* to_string(BenchAlgo algo) {
  switch (algo) {
    case BenchAlgo::greedy: return "greedy";
    case BenchAlgo::generous: return "generous";
    case BenchAlgo::mincost: return "mincost";
  }
  return "?";
}

const char* to_string(SweepParam param) {
  switch (param) {
    case SweepParam::n1: return "n1";
    case SweepParam::R: return "R";
    case SweepParam::popularity: return "popularity";
    case SweepParam::tie_density: return "tie_density";
  }
  return "?";
}

std::vector<RunReport> sweep(const SweepConfig& config) {
  if (config.trials < 1) throw ConfigError("sweep needs trials >= 1");
  if (config.values.empty()) throw ConfigError("sweep needs at least one value");
  if (!std::is_sorted(config.values.begin(), config.values.end())) {
    throw ConfigError("sweep values must be ascending");
  }

  std::vector<RunReport> reports;
  for (double value : config.values) {
    for (int trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t seed =
          mix_seed({config.master_seed,
                    static_cast<std::uint64_t>(config.param),
                    std::bit_cast<std::uint64_t>(value),
                    static_cast<std::uint64_t>(trial)});
      GenConfig gen = config_for(config, value);
      gen.seed = seed;
      SpaInstance instance;
      try {
        instance = generate(gen);
      } catch (const Error& e) {
        throw ConfigError("sweep cell value=" + value_csv(value) + " trial=" +
                          std::to_string(trial) + ": " + e.what());
      }

      std::vector<std::pair<BenchAlgo, SolveResult>> results;
      for (BenchAlgo algo : config.algos) {
        try {
          results.emplace_back(algo, run_algo(instance, algo));
        } catch (const Error& e) {
          throw InternalError("sweep cell seed " + std::to_string(seed) +
                              " algo " + to_string(algo) + ": " + e.what());
        }
      }
      check_cell(instance, seed, results);

      for (auto& [algo, result] : results) {
        RunReport row;
        row.param = config.param;
        row.value = value;
        row.trial = trial;
        row.seed = seed;
        row.algo = algo;
        row.size = result.stats.size;
        row.degree = result.stats.degree;
        row.cost = result.stats.cost;
        row.profile = result.stats.profile;
        row.elapsed_s = result.elapsed_s;
        reports.push_back(std::move(row));
      }
    }
  }
  return reports;
}

std::string reports_to_csv(const std::vector<RunReport>& reports,
                           bool with_aggregates) {
  std::ostringstream out;
  out << "param,value,trial,seed,algo,size,degree,cost,profile,elapsed_s\n";
  for (const auto& row : reports) {
    out << to_string(row.param) << ',' << value_csv(row.value) << ','
        << row.trial << ',' << row.seed << ',' << to_string(row.algo) << ','
        << row.size << ',' << row.degree << ',' << row.cost << ','
        << profile_csv(row.profile) << ',' << format_double(row.elapsed_s)
        << '\n';
  }
  if (!with_aggregates) return out.str();

  // Mean rows per (value, algo), in first-appearance order.
  struct Aggregate {
    int count = 0;
    double size = 0, degree = 0, cost = 0, elapsed = 0;
    std::vector<double> profile;
  };
  std::vector<std::pair<std::pair<double, BenchAlgo>, Aggregate>> aggregates;
  for (const auto& row : reports) {
    const auto key = std::make_pair(row.value, row.algo);
    auto it = std::find_if(aggregates.begin(), aggregates.end(),
                           [&](const auto& entry) { return entry.first == key; });
    if (it == aggregates.end()) {
      aggregates.push_back({key, {}});
      it = std::prev(aggregates.end());
    }
    Aggregate& a = it->second;
    ++a.count;
    a.size += row.size;
    a.degree += row.degree;
    a.cost += static_cast<double>(row.cost);
    a.elapsed += row.elapsed_s;
    if (a.profile.size() < row.profile.values.size()) {
      a.profile.resize(row.profile.values.size(), 0.0);
    }
    for (std::size_t r = 0; r < row.profile.values.size(); ++r) {
      a.profile[r] += row.profile.values[r];
    }
  }
  for (const auto& [key, a] : aggregates) {
    const double n = a.count;
    out << (reports.empty() ? "" : to_string(reports.front().param)) << ','
        << value_csv(key.first) << ",mean,," << to_string(key.second) << ','
        << format_double(a.size / n) << ',' << format_double(a.degree / n)
        << ',' << format_double(a.cost / n) << ',';
    for (std::size_t r = 0; r < a.profile.size(); ++r) {
      if (r > 0) out << '|';
      out << format_double(a.profile[r] / n);
    }
    out << ',' << format_double(a.elapsed / n) << '\n';
  }
  return out.str();
}

std::vector<BreakdownRow> profile_breakdown(const std::vector<RunReport>& reports) {
  std::vector<BreakdownRow> rows;
  if (reports.empty()) return rows;

  for (const auto& report : reports) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const BreakdownRow& r) {
      return r.algo == report.algo;
    });
    if (it == rows.end()) {
      rows.push_back({report.algo, {}, 0.0});
      it = std::prev(rows.end());
    }
    BreakdownRow& row = *it;
    if (row.rank_percent.size() < report.profile.values.size()) {
      row.rank_percent.resize(report.profile.values.size(), 0.0);
    }
    if (report.size > 0) {
      for (std::size_t r = 0; r < report.profile.values.size(); ++r) {
        row.rank_percent[r] +=
            100.0 * report.profile.values[r] / static_cast<double>(report.size);
      }
    }
    row.mean_cost += static_cast<double>(report.cost);
  }
  std::map<BenchAlgo, int> counts;
  for (const auto& report : reports) ++counts[report.algo];
  for (auto& row : rows) {
    const double n = counts[row.algo];
    for (double& percent : row.rank_percent) percent /= n;
    row.mean_cost /= n;
  }
  return rows;
}

std::string breakdown_to_string(const std::vector<BreakdownRow>& rows) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "algo";
  std::size_t ranks = 0;
  for (const auto& row : rows) ranks = std::max(ranks, row.rank_percent.size());
  for (std::size_t r = 1; r <= ranks; ++r) out << ",rank" << r << "_pct";
  out << ",mean_cost\n";
  for (const auto& row : rows) {
    out << to_string(row.algo);
    for (std::size_t r = 0; r < ranks; ++r) {
      out << ',' << (r < row.rank_percent.size() ? row.rank_percent[r] : 0.0);
    }
    out << ',' << row.mean_cost << '\n';
  }
  return out.str();
}

}  // namespace spa
