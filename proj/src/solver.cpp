#include "spa/solver.hpp"

#include <chrono>
#include <deque>

#include "spa/errors.hpp"

namespace spa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_no_lower_quotas(const SpaInstance& instance) {
  for (const auto& l : instance.lecturers()) {
    if (l.lower_quota != 0) {
      throw ContractError(
          "instance has lecturer lower quotas; use the constrained solver");
    }
  }
}

// Repeatedly augments along optimal-profile paths until none exists.
// Returns the number of augmentations.
int augment_to_optimum(const FlowNetwork& network, Flow& flow,
                       ProfileOrder order, const SolveOptions& options) {
  SearchOptions search_options;
  search_options.trace = options.trace;
  int augmentations = 0;
  while (auto path = find_optimal_aug_path(network, flow, order, search_options)) {
    augment(network, flow, *path);
    ++augmentations;
  }
  return augmentations;
}

SolveResult finish(const FlowNetwork& network, const Flow& flow,
                   int iterations, Clock::time_point start) {
  SolveResult result;
  result.matching = matching_from_flow(network, flow);
  result.stats = matching_stats(network.instance(), *result.matching);
  result.iterations = iterations;
  if (result.stats.size != max_matching_size(network)) {
    throw InternalError("solver produced a non-maximum matching of size " +
                        std::to_string(result.stats.size));
  }
  result.elapsed_s = seconds_since(start);
  return result;
}

SolveResult solve_unconstrained(const SpaInstance& instance, ProfileOrder order,
                                const SolveOptions& options) {
  const auto start = Clock::now();
  require_no_lower_quotas(instance);
  FlowNetwork network(instance);
  Flow flow = empty_flow(network);
  const int iterations = augment_to_optimum(network, flow, order, options);
  return finish(network, flow, iterations, start);
}

SolveResult solve_constrained(const SpaInstance& instance, ProfileOrder order,
                              const SolveOptions& options) {
  const auto start = Clock::now();

  // Phase 1: cap every lecturer at her lower quota; a maximum matching there
  // saturates all quotas exactly when the instance is feasible.
  std::vector<int> quota_caps;
  quota_caps.reserve(static_cast<std::size_t>(instance.lecturer_count()));
  int quota_total = 0;
  for (const auto& l : instance.lecturers()) {
    quota_caps.push_back(l.lower_quota);
    quota_total += l.lower_quota;
  }
  FlowNetwork phase1(instance, std::move(quota_caps));
  Flow flow = empty_flow(phase1);
  int iterations = augment_to_optimum(phase1, flow, order, options);

  if (flow.value != quota_total) {
    SolveResult result;
    result.iterations = iterations;
    result.stats.profile = Profile::zeros(instance.max_rank());
    result.elapsed_s = seconds_since(start);
    return result;
  }

  // Phase 2: same flow, full capacities. The arrays carry over unchanged
  // because both networks share the instance's node and edge structure.
  FlowNetwork network(instance);
  iterations += augment_to_optimum(network, flow, order, options);
  return finish(network, flow, iterations, start);
}

}  // namespace

SolveResult greedy_max(const SpaInstance& instance, const SolveOptions& options) {
  return solve_unconstrained(instance, ProfileOrder::left_max, options);
}

SolveResult generous_max(const SpaInstance& instance, const SolveOptions& options) {
  return solve_unconstrained(instance, ProfileOrder::right_min, options);
}

SolveResult greedy_max_constrained(const SpaInstance& instance,
                                   const SolveOptions& options) {
  return solve_constrained(instance, ProfileOrder::left_max, options);
}

SolveResult generous_max_constrained(const SpaInstance& instance,
                                     const SolveOptions& options) {
  return solve_constrained(instance, ProfileOrder::right_min, options);
}

int max_matching_size(const FlowNetwork& network) {
  const auto& inst = network.instance();
  const int n1 = inst.student_count();
  Flow flow = empty_flow(network);

  // Edmonds-Karp on the layered network: nodes visited once per search,
  // backward edges via matched students and loaded sibling projects.
  struct From {
    AugPath::NodeKind kind;
    int id;
  };
  while (true) {
    std::vector<From> pred_project(static_cast<std::size_t>(inst.project_count()),
                                   {AugPath::NodeKind::source, -1});
    std::vector<bool> seen_project(static_cast<std::size_t>(inst.project_count()), false);
    std::vector<bool> seen_lecturer(static_cast<std::size_t>(inst.lecturer_count()), false);
    std::vector<From> pred_lecturer(static_cast<std::size_t>(inst.lecturer_count()),
                                    {AugPath::NodeKind::source, -1});
    std::deque<int> queue;  // project ids in BFS order

    for (int s = 0; s < n1; ++s) {
      if (!exposed_student(flow, s)) continue;
      for (const auto& e : inst.preference_edges(s)) {
        if (!seen_project[static_cast<std::size_t>(e.project)]) {
          seen_project[static_cast<std::size_t>(e.project)] = true;
          pred_project[static_cast<std::size_t>(e.project)] = {
              AugPath::NodeKind::student, s};
          queue.push_back(e.project);
        }
      }
    }

    int terminal = -1;
    std::vector<std::vector<int>> students_of(
        static_cast<std::size_t>(inst.project_count()));
    for (int s = 0; s < n1; ++s) {
      const int j = flow.project_of[static_cast<std::size_t>(s)];
      if (j >= 0) students_of[static_cast<std::size_t>(j)].push_back(s);
    }

    while (!queue.empty() && terminal < 0) {
      const int p = queue.front();
      queue.pop_front();
      if (exposed_project(network, flow, p)) {
        terminal = p;
        break;
      }
      // Backward through matched students of p.
      for (int s : students_of[static_cast<std::size_t>(p)]) {
        for (const auto& e : inst.preference_edges(s)) {
          if (e.project == p || seen_project[static_cast<std::size_t>(e.project)]) {
            continue;
          }
          seen_project[static_cast<std::size_t>(e.project)] = true;
          pred_project[static_cast<std::size_t>(e.project)] = {
              AugPath::NodeKind::student, s};
          queue.push_back(e.project);
        }
      }
      // Forward into the lecturer, backward out through a loaded sibling.
      const int k = network.lecturer_of(p);
      if (flow.project_load[static_cast<std::size_t>(p)] < network.project_cap(p) &&
          !seen_lecturer[static_cast<std::size_t>(k)]) {
        seen_lecturer[static_cast<std::size_t>(k)] = true;
        pred_lecturer[static_cast<std::size_t>(k)] = {AugPath::NodeKind::project, p};
        for (int sibling : inst.lecturer_projects(k)) {
          if (sibling == p || seen_project[static_cast<std::size_t>(sibling)]) {
            continue;
          }
          if (flow.project_load[static_cast<std::size_t>(sibling)] <= 0) continue;
          seen_project[static_cast<std::size_t>(sibling)] = true;
          pred_project[static_cast<std::size_t>(sibling)] = {
              AugPath::NodeKind::lecturer, k};
          queue.push_back(sibling);
        }
      }
    }

    if (terminal < 0) return flow.value;

    // Apply the path directly: walk predecessors, reassigning students.
    int p = terminal;
    while (true) {
      const From via = pred_project[static_cast<std::size_t>(p)];
      if (via.kind == AugPath::NodeKind::student) {
        const int s = via.id;
        const int previous = flow.project_of[static_cast<std::size_t>(s)];
        flow.project_of[static_cast<std::size_t>(s)] = p;
        if (previous < 0) break;
        p = previous;
      } else {
        p = pred_lecturer[static_cast<std::size_t>(via.id)].id;
      }
    }
    std::fill(flow.project_load.begin(), flow.project_load.end(), 0);
    std::fill(flow.lecturer_load.begin(), flow.lecturer_load.end(), 0);
    flow.value = 0;
    for (int s = 0; s < n1; ++s) {
      const int j = flow.project_of[static_cast<std::size_t>(s)];
      if (j < 0) continue;
      ++flow.project_load[static_cast<std::size_t>(j)];
      ++flow.lecturer_load[static_cast<std::size_t>(network.lecturer_of(j))];
      ++flow.value;
    }
  }
}

}  // namespace spa
