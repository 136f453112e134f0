#include "spa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "spa/bench.hpp"
#include "spa/errors.hpp"
#include "spa/generator.hpp"
#include "spa/instance_io.hpp"
#include "spa/mcmf.hpp"
#include "spa/oracle.hpp"
#include "spa/solver.hpp"

namespace spa {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
  }
}

SpaInstance load_validated(const std::string& path) {
  SpaInstance instance = load_instance(path);
  const ValidationReport report = validate(instance);
  if (!report.ok()) {
    throw ValidationError(path + " is not a valid instance:\n" + report.to_string());
  }
  return instance;
}

struct SolveArgs {
  std::string instance_path;
  std::string algo = "greedy";
  std::string arith = "exact";
  std::string out_path;
  bool verbose = false;
};

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const SpaInstance instance = load_validated(args.instance_path);
  SolveOptions options;
  if (args.verbose) {
    options.trace = [&err](const std::string& line) { err << line << '\n'; };
  }
  const ArithmeticMode mode = args.arith == "float64" ? ArithmeticMode::float64
                                                      : ArithmeticMode::exact;

  SolveResult result;
  if (args.algo == "greedy") {
    result = greedy_max(instance, options);
  } else if (args.algo == "generous") {
    result = generous_max(instance, options);
  } else if (args.algo == "greedy-l") {
    result = greedy_max_constrained(instance, options);
  } else if (args.algo == "generous-l") {
    result = generous_max_constrained(instance, options);
  } else if (args.algo == "mincost") {
    result = solve_mcmf(instance, CostScheme::rank, mode);
  } else if (args.algo == "mcmf-greedy") {
    result = solve_mcmf(instance, CostScheme::greedy_exp, mode);
  } else if (args.algo == "mcmf-generous") {
    result = solve_mcmf(instance, CostScheme::generous_exp, mode);
  } else {
    throw ConfigError("unknown algorithm: " + args.algo);
  }

  if (!result.matching) {
    err << "no constrained matching exists: the lecturer lower quotas cannot "
           "be met\n";
    return kExitInfeasible;
  }
  emit(write_matching(instance, *result.matching), args.out_path, out);
  err << "# algo=" << args.algo << " iterations=" << result.iterations
      << " elapsed_s=" << std::fixed << std::setprecision(6)
      << result.elapsed_s << '\n';
  return kExitOk;
}

struct GenerateArgs {
  int n1 = 100;
  std::optional<int> n2, n3, cp, cl;
  int r_min = 10, r_max = 10;
  double popularity = 5.0;
  double tie_density = 0.0;
  int lp = 0, ll = 0;
  std::uint64_t seed = 1;
  std::string out_path;
};

int run_generate(const GenerateArgs& args, std::ostream& out, std::ostream&) {
  GenConfig config = GenConfig::defaults_for(args.n1);
  if (args.n2) config.n2 = *args.n2;
  if (args.n3) config.n3 = *args.n3;
  if (args.cp) config.total_project_cap = *args.cp;
  if (args.cl) config.total_lecturer_cap = *args.cl;
  config.r_min = args.r_min;
  config.r_max = args.r_max;
  config.popularity = args.popularity;
  config.tie_density = args.tie_density;
  config.total_project_lower = args.lp;
  config.total_lecturer_lower = args.ll;
  config.seed = args.seed;
  emit(write_instance(generate(config)), args.out_path, out);
  return kExitOk;
}

struct BenchArgs {
  std::string sweep_param = "n1";
  std::vector<double> values;
  int trials = 1;
  std::string algos = "greedy,generous,mincost";
  std::uint64_t master_seed = 1;
  std::string out_path;
  int base_n1 = 100;
  int r_min = 10, r_max = 10;
  double popularity = 5.0;
  double tie_density = 0.0;
  bool breakdown = false;
  // Feasibility study mode.
  bool feasibility = false;
  std::vector<int> n1_values;
  std::vector<int> r_values;
  std::string scheme = "greedy-exp";
  std::string arith = "float64";
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.feasibility) {
    if (args.n1_values.empty() || args.r_values.empty()) {
      throw ConfigError("feasibility mode needs --n1-values and --r-values");
    }
    const CostScheme scheme = args.scheme == "generous-exp"
                                  ? CostScheme::generous_exp
                                  : CostScheme::greedy_exp;
    const ArithmeticMode mode = args.arith == "exact" ? ArithmeticMode::exact
                                                      : ArithmeticMode::float64;
    const auto cells = feasibility_sweep(args.n1_values, args.r_values,
                                         args.trials, scheme, mode,
                                         args.master_seed);
    emit(feasibility_csv(cells), args.out_path, out);
    return kExitOk;
  }

  SweepConfig config;
  if (args.sweep_param == "n1") {
    config.param = SweepParam::n1;
  } else if (args.sweep_param == "R") {
    config.param = SweepParam::R;
  } else if (args.sweep_param == "popularity") {
    config.param = SweepParam::popularity;
  } else if (args.sweep_param == "tie_density") {
    config.param = SweepParam::tie_density;
  } else {
    throw ConfigError("unknown sweep parameter: " + args.sweep_param);
  }
  config.values = args.values;
  config.trials = args.trials;
  config.master_seed = args.master_seed;
  config.base = GenConfig::defaults_for(args.base_n1);
  config.base.r_min = args.r_min;
  config.base.r_max = args.r_max;
  config.base.popularity = args.popularity;
  config.base.tie_density = args.tie_density;
  config.algos.clear();
  for (const auto& name : split_csv(args.algos)) {
    if (name == "greedy") {
      config.algos.push_back(BenchAlgo::greedy);
    } else if (name == "generous") {
      config.algos.push_back(BenchAlgo::generous);
    } else if (name == "mincost") {
      config.algos.push_back(BenchAlgo::mincost);
    } else {
      throw ConfigError("unknown benchmark algorithm: " + name);
    }
  }

  const auto reports = sweep(config);
  emit(reports_to_csv(reports), args.out_path, out);
  if (args.breakdown) err << breakdown_to_string(profile_breakdown(reports));
  return kExitOk;
}

struct VerifyArgs {
  std::string instance_path;
  std::string matching_path;
  std::string algo = "greedy";
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream&) {
  const SpaInstance instance = load_validated(args.instance_path);
  const Matching matching =
      parse_matching(read_text_file(args.matching_path), instance);

  bool ok = true;
  const auto problems = check_matching(instance, matching);
  for (const auto& p : problems) {
    out << "invalid: " << p << '\n';
    ok = false;
  }
  const bool constrained = args.algo == "greedy-l" || args.algo == "generous-l";
  if (constrained) {
    for (const auto& l : instance.lecturers()) {
      int load = 0;
      for (int i = 0; i < instance.student_count(); ++i) {
        const int j = matching.project_of[static_cast<std::size_t>(i)];
        if (j >= 0 && instance.projects()[static_cast<std::size_t>(j)].lecturer == l.id) {
          ++load;
        }
      }
      if (load < l.lower_quota) {
        out << "invalid: lecturer " << l.id + 1 << " below lower quota ("
            << load << " < " << l.lower_quota << ")\n";
        ok = false;
      }
    }
  }
  out << "validity: " << (ok ? "ok" : "failed") << '\n';
  if (!ok) return kExitInput;

  const MatchStats stats = matching_stats(instance, matching);
  FlowNetwork network(instance);
  const int maximum = max_matching_size(network);
  out << "size: " << stats.size << " (maximum " << maximum << ")\n";
  if (stats.size != maximum) {
    out << "optimality: failed (not a maximum matching)\n";
    return kExitInput;
  }

  const ProfileOrder order = (args.algo == "greedy" || args.algo == "greedy-l")
                                 ? ProfileOrder::left_max
                                 : ProfileOrder::right_min;
  try {
    const auto best = enumerate_best(instance, std::nullopt, order, constrained);
    if (!best) {
      out << "optimality: failed (no feasible matching per the oracle)\n";
      return kExitInput;
    }
    if (best->profile == stats.profile) {
      out << "optimality: ok, profile " << to_string(stats.profile)
          << " is the " << args.algo << " optimum\n";
    } else {
      out << "optimality: failed, profile " << to_string(stats.profile)
          << " vs optimal " << to_string(best->profile) << '\n';
      return kExitInput;
    }
  } catch (const BudgetError&) {
    out << "optimality: skipped (instance exceeds the oracle budget)\n";
  }
  return kExitOk;
}

struct CompareArgs {
  std::string instance_path;
};

int run_compare(const CompareArgs& args, std::ostream& out, std::ostream&) {
  const SpaInstance instance = load_validated(args.instance_path);
  struct Row {
    const char* name;
    SolveResult result;
  };
  std::vector<Row> rows;
  rows.push_back({"greedy", greedy_max(instance)});
  rows.push_back({"generous", generous_max(instance)});
  rows.push_back({"mincost", solve_mcmf(instance, CostScheme::rank,
                                        ArithmeticMode::exact)});
  out << "algo,size,profile,cost,degree,elapsed_s\n";
  for (const auto& row : rows) {
    out << row.name << ',' << row.result.stats.size << ','
        << to_string(row.result.stats.profile) << ',' << row.result.stats.cost
        << ',' << row.result.stats.degree << ',' << std::fixed
        << std::setprecision(6) << row.result.elapsed_s << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Profile-optimal student/project allocation via network flow"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("instance", solve_args.instance_path, "instance file")
      ->required();
  solve->add_option("--algo", solve_args.algo,
                    "greedy|generous|mincost|greedy-l|generous-l|mcmf-greedy|"
                    "mcmf-generous")
      ->default_val("greedy");
  solve->add_option("--arith", solve_args.arith, "exact|float64 (mcmf only)")
      ->default_val("exact")
      ->check(CLI::IsMember({"exact", "float64"}));
  solve->add_option("--out", solve_args.out_path, "output file (default stdout)");
  solve->add_flag("--verbose", solve_args.verbose, "trace label updates");

  GenerateArgs generate_args;
  auto* gen = app.add_subcommand("generate", "Write a random instance file");
  gen->add_option("--n1", generate_args.n1, "students")->default_val(100);
  gen->add_option("--n2", generate_args.n2, "projects (default 0.3*n1)");
  gen->add_option("--n3", generate_args.n3, "lecturers (default 0.3*n1)");
  gen->add_option("--r-min", generate_args.r_min, "min list length");
  gen->add_option("--r-max", generate_args.r_max, "max list length");
  gen->add_option("--popularity", generate_args.popularity, "popularity ratio");
  gen->add_option("--total-project-cap", generate_args.cp,
                  "total project capacity (default 1.2*n1)");
  gen->add_option("--total-lecturer-cap", generate_args.cl,
                  "total lecturer capacity (default 1.2*n1)");
  gen->add_option("--tie-density", generate_args.tie_density, "tie density");
  gen->add_option("--total-project-lower", generate_args.lp,
                  "total project lower quota (must stay 0)");
  gen->add_option("--total-lecturer-lower", generate_args.ll,
                  "total lecturer lower quota, split evenly");
  gen->add_option("--seed", generate_args.seed, "RNG seed")->default_val(1);
  gen->add_option("--out", generate_args.out_path, "output file");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Sweep generated instances to CSV");
  bench->add_option("--sweep", bench_args.sweep_param,
                    "n1|R|popularity|tie_density");
  bench->add_option("--values", bench_args.values, "swept values, ascending")
      ->delimiter(',');
  bench->add_option("--trials", bench_args.trials, "instances per value")
      ->default_val(1);
  bench->add_option("--algos", bench_args.algos, "subset of greedy,generous,mincost");
  bench->add_option("--master-seed", bench_args.master_seed, "master seed")
      ->default_val(1);
  bench->add_option("--out", bench_args.out_path, "CSV file (default stdout)");
  bench->add_option("--n1", bench_args.base_n1, "base student count")
      ->default_val(100);
  bench->add_option("--r-min", bench_args.r_min, "base min list length");
  bench->add_option("--r-max", bench_args.r_max, "base max list length");
  bench->add_option("--popularity", bench_args.popularity, "base popularity");
  bench->add_option("--tie-density", bench_args.tie_density, "base tie density");
  bench->add_flag("--breakdown", bench_args.breakdown,
                  "print per-rank percentage table to stderr");
  bench->add_flag("--feasibility", bench_args.feasibility,
                  "min-cost flow arithmetic feasibility study");
  bench->add_option("--n1-values", bench_args.n1_values, "feasibility n1 grid")
      ->delimiter(',');
  bench->add_option("--r-values", bench_args.r_values, "feasibility R grid")
      ->delimiter(',');
  bench->add_option("--scheme", bench_args.scheme, "greedy-exp|generous-exp")
      ->check(CLI::IsMember({"greedy-exp", "generous-exp"}));
  bench->add_option("--arith", bench_args.arith, "exact|float64")
      ->check(CLI::IsMember({"exact", "float64"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Re-check a matching's validity and optimality");
  verify->add_option("instance", verify_args.instance_path, "instance file")
      ->required();
  verify->add_option("matching", verify_args.matching_path, "matching file")
      ->required();
  verify->add_option("--algo", verify_args.algo,
                     "greedy|generous|greedy-l|generous-l")
      ->default_val("greedy")
      ->check(CLI::IsMember({"greedy", "generous", "greedy-l", "generous-l"}));

  CompareArgs compare_args;
  auto* compare = app.add_subcommand(
      "compare", "Run greedy, generous and mincost side by side");
  compare->add_option("instance", compare_args.instance_path, "instance file")
      ->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n' << "run with --help for usage\n";
    return kExitInput;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(solve_args, out, err);
    if (app.got_subcommand(gen)) return run_generate(generate_args, out, err);
    if (app.got_subcommand(bench)) return run_bench(bench_args, out, err);
    if (app.got_subcommand(verify)) return run_verify(verify_args, out, err);
    if (app.got_subcommand(compare)) return run_compare(compare_args, out, err);
    err << "no subcommand given\n";
    return kExitInput;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace spa
