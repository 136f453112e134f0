#include "spa/mcmf.hpp"

#include <gmpxx.h>

#include <chrono>
#include <deque>
#include <sstream>

#include "spa/errors.hpp"
#include "spa/generator.hpp"
#include "spa/network.hpp"
#include "spa/rng.hpp"

namespace spa {

namespace {

mpz_class power(int base, int exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return out;
}

mpz_class exact_scheme_cost(CostScheme scheme, int n1, int R, int rank) {
  switch (scheme) {
    case CostScheme::greedy_exp:
      return power(n1, R - 1) - power(n1, R - rank);
    case CostScheme::generous_exp:
      return power(n1, rank - 1);
    case CostScheme::rank:
      return mpz_class(rank);
  }
  throw ContractError("unknown cost scheme");
}

template <class Cost>
Cost to_cost(const mpz_class& value);

template <>
mpz_class to_cost<mpz_class>(const mpz_class& value) {
  return value;
}

template <>
double to_cost<double>(const mpz_class& value) {
  return value.get_d();
}

// Successive shortest augmenting paths with a label-correcting (queue-based
// Bellman-Ford) search on reduced costs. The Cost type is either mpz_class
// (exact) or double (the deliberately fragile mode). Float rounding can in
// principle manufacture a tiny negative cycle, so the search bounds how
// often a node may be dequeued and the result is then whatever the damaged
// labels produce.
template <class Cost>
class MinCostMaxFlow {
 public:
  explicit MinCostMaxFlow(int nodes)
      : node_count_(nodes), adjacency_(static_cast<std::size_t>(nodes)) {}

  int add_arc(int from, int to, int cap, Cost cost) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap, cost});
    arcs_.push_back({from, 0, -cost});
    adjacency_[static_cast<std::size_t>(from)].push_back(id);
    adjacency_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  int residual(int arc_id) const {
    return arcs_[static_cast<std::size_t>(arc_id)].cap;
  }

  // Pushes flow until the sink is unreachable; returns the flow value.
  int run(int source, int sink) {
    potential_.assign(static_cast<std::size_t>(node_count_), Cost(0));
    int total = 0;
    while (true) {
      if (!find_path(source, sink)) break;

      // Collect the path first; a malformed parent chain (possible only in
      // float64 mode) aborts without touching the arcs.
      std::vector<int> path;
      int at = sink;
      while (at != source) {
        if (static_cast<int>(path.size()) > node_count_) return total;
        const int arc = parent_arc_[static_cast<std::size_t>(at)];
        path.push_back(arc);
        at = arcs_[static_cast<std::size_t>(arc ^ 1)].to;
      }
      int bottleneck = arcs_[static_cast<std::size_t>(path.front())].cap;
      for (int arc : path) {
        bottleneck = std::min(bottleneck, arcs_[static_cast<std::size_t>(arc)].cap);
      }
      for (int arc : path) {
        arcs_[static_cast<std::size_t>(arc)].cap -= bottleneck;
        arcs_[static_cast<std::size_t>(arc ^ 1)].cap += bottleneck;
      }
      total += bottleneck;
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    int cap;  // residual capacity
    Cost cost;
  };

  bool find_path(int source, int sink) {
    const std::size_t n = static_cast<std::size_t>(node_count_);
    distance_.assign(n, Cost(0));
    reached_.assign(n, 0);
    in_queue_.assign(n, 0);
    dequeues_.assign(n, 0);
    parent_arc_.assign(n, -1);

    std::deque<int> queue;
    reached_[static_cast<std::size_t>(source)] = 1;
    in_queue_[static_cast<std::size_t>(source)] = 1;
    queue.push_back(source);

    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      in_queue_[static_cast<std::size_t>(u)] = 0;
      if (++dequeues_[static_cast<std::size_t>(u)] > node_count_ + 5) {
        break;  // rounding produced a negative cycle; stop improving
      }
      for (int arc_id : adjacency_[static_cast<std::size_t>(u)]) {
        const Arc& arc = arcs_[static_cast<std::size_t>(arc_id)];
        if (arc.cap <= 0) continue;
        const int v = arc.to;
        Cost candidate = distance_[static_cast<std::size_t>(u)] + arc.cost +
                         potential_[static_cast<std::size_t>(u)] -
                         potential_[static_cast<std::size_t>(v)];
        if (!reached_[static_cast<std::size_t>(v)] ||
            candidate < distance_[static_cast<std::size_t>(v)]) {
          reached_[static_cast<std::size_t>(v)] = 1;
          distance_[static_cast<std::size_t>(v)] = std::move(candidate);
          parent_arc_[static_cast<std::size_t>(v)] = arc_id;
          if (!in_queue_[static_cast<std::size_t>(v)]) {
            in_queue_[static_cast<std::size_t>(v)] = 1;
            queue.push_back(v);
          }
        }
      }
    }

    if (!reached_[static_cast<std::size_t>(sink)]) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (reached_[v]) potential_[v] += distance_[v];
    }
    return true;
  }

  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<Cost> potential_;
  std::vector<Cost> distance_;
  std::vector<char> reached_;
  std::vector<char> in_queue_;
  std::vector<int> dequeues_;
  std::vector<int> parent_arc_;
};

template <class Cost>
Matching run_mcmf(const SpaInstance& instance, CostScheme scheme) {
  const int n1 = instance.student_count();
  const int n2 = instance.project_count();
  const int n3 = instance.lecturer_count();
  const int R = instance.max_rank();
  const int source = 0;
  const int sink = 1 + n1 + n2 + n3;
  auto student_node = [&](int s) { return 1 + s; };
  auto project_node = [&](int j) { return 1 + n1 + j; };
  auto lecturer_node = [&](int k) { return 1 + n1 + n2 + k; };

  std::vector<Cost> cost_at_rank(static_cast<std::size_t>(R) + 1, Cost(0));
  for (int k = 1; k <= R; ++k) {
    cost_at_rank[static_cast<std::size_t>(k)] =
        to_cost<Cost>(exact_scheme_cost(scheme, n1, R, k));
  }

  MinCostMaxFlow<Cost> flow(sink + 1);
  struct E2Arc {
    int student;
    int project;
    int arc;
  };
  std::vector<E2Arc> pair_arcs;
  for (int s = 0; s < n1; ++s) {
    flow.add_arc(source, student_node(s), 1, Cost(0));
    for (const auto& e : instance.preference_edges(s)) {
      pair_arcs.push_back(
          {s, e.project,
           flow.add_arc(student_node(s), project_node(e.project), 1,
                        cost_at_rank[static_cast<std::size_t>(e.rank)])});
    }
  }
  for (int j = 0; j < n2; ++j) {
    flow.add_arc(project_node(j), lecturer_node(instance.projects()[static_cast<std::size_t>(j)].lecturer),
                 instance.projects()[static_cast<std::size_t>(j)].capacity, Cost(0));
  }
  for (int k = 0; k < n3; ++k) {
    flow.add_arc(lecturer_node(k), sink,
                 instance.lecturers()[static_cast<std::size_t>(k)].upper_quota,
                 Cost(0));
  }

  flow.run(source, sink);

  Matching matching;
  matching.project_of.assign(static_cast<std::size_t>(n1), -1);
  for (const auto& pa : pair_arcs) {
    if (flow.residual(pa.arc) == 0) {
      matching.project_of[static_cast<std::size_t>(pa.student)] = pa.project;
    }
  }
  return matching;
}

}  // namespace

const char* to_string(CostScheme scheme) {
  switch (scheme) {
    case CostScheme::greedy_exp: return "greedy_exp";
    case CostScheme::generous_exp: return "generous_exp";
    case CostScheme::rank: return "rank";
  }
  return "?";
}

const char* to_string(ArithmeticMode mode) {
  return mode == ArithmeticMode::exact ? "exact" : "float64";
}

std::string scheme_cost_decimal(CostScheme scheme, int n1, int R, int rank) {
  if (rank < 1 || rank > R) throw ContractError("rank out of range");
  return exact_scheme_cost(scheme, n1, R, rank).get_str();
}

SolveResult solve_mcmf(const SpaInstance& instance, CostScheme scheme,
                       ArithmeticMode mode) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& l : instance.lecturers()) {
    if (l.lower_quota != 0) {
      throw ContractError("the min-cost solver does not support lower quotas");
    }
  }
  Matching matching = mode == ArithmeticMode::exact
                          ? run_mcmf<mpz_class>(instance, scheme)
                          : run_mcmf<double>(instance, scheme);
  SolveResult result;
  result.stats = matching_stats(instance, matching);
  result.iterations = result.stats.size;
  result.matching = std::move(matching);
  result.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

int count_disagreements(int n1, int R, int trials, CostScheme scheme,
                        ArithmeticMode mode, std::uint64_t master_seed) {
  if (scheme == CostScheme::rank) {
    throw ConfigError(
        "feasibility check needs an exponential scheme; rank-cost optima are "
        "not profile-unique");
  }
  GenConfig config = GenConfig::defaults_for(n1);
  config.n2 = std::max(config.n2, R);
  config.n3 = std::max(config.n3, R);
  config.total_project_cap = std::max(config.total_project_cap, config.n2);
  config.total_lecturer_cap = std::max(config.total_lecturer_cap, config.n3);
  config.r_min = config.r_max = R;

  int disagreements = 0;
  for (int trial = 0; trial < trials; ++trial) {
    config.seed = mix_seed({master_seed, static_cast<std::uint64_t>(n1),
                            static_cast<std::uint64_t>(R),
                            static_cast<std::uint64_t>(trial)});
    const SpaInstance instance = generate(config);
    const SolveResult reference = scheme == CostScheme::greedy_exp
                                      ? greedy_max(instance)
                                      : generous_max(instance);
    const SolveResult candidate = solve_mcmf(instance, scheme, mode);
    if (candidate.stats.profile != reference.stats.profile) ++disagreements;
  }
  return disagreements;
}

std::vector<FeasibilityCell> feasibility_sweep(const std::vector<int>& n1_values,
                                               const std::vector<int>& r_values,
                                               int trials, CostScheme scheme,
                                               ArithmeticMode mode,
                                               std::uint64_t master_seed) {
  std::vector<FeasibilityCell> cells;
  for (int n1 : n1_values) {
    FeasibilityCell cell;
    cell.n1 = n1;
    cell.trials = trials;
    cell.scheme = scheme;
    cell.mode = mode;
    for (int R : r_values) {  // ascending: record the first failing R
      if (count_disagreements(n1, R, trials, scheme, mode, master_seed) > 0) {
        cell.first_disagreement_R = R;
        break;
      }
    }
    cells.push_back(cell);
  }
  return cells;
}

std::string feasibility_csv(const std::vector<FeasibilityCell>& cells) {
  std::ostringstream out;
  out << "n1,R_first_disagreement,trials,scheme,mode\n";
  for (const auto& cell : cells) {
    out << cell.n1 << ',';
    if (cell.first_disagreement_R) {
      out << *cell.first_disagreement_R;
    } else {
      out << "none";
    }
    out << ',' << cell.trials << ',' << to_string(cell.scheme) << ','
        << to_string(cell.mode) << '\n';
  }
  return out.str();
}

}  // namespace spa
