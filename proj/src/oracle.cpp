#include "spa/oracle.hpp"

#include <algorithm>

#include "spa/errors.hpp"

namespace spa {

namespace {

void check_budget(const SpaInstance& instance, const OracleBudget& budget) {
  if (instance.student_count() > budget.max_students) {
    throw BudgetError("oracle budget: " + std::to_string(instance.student_count()) +
                      " students > cap " + std::to_string(budget.max_students));
  }
  for (const auto& s : instance.students()) {
    std::size_t len = 0;
    for (const auto& group : s.pref_groups) len += group.size();
    if (static_cast<int>(len) > budget.max_list_len) {
      throw BudgetError("oracle budget: preference list of student " +
                        std::to_string(s.id + 1) + " longer than cap " +
                        std::to_string(budget.max_list_len));
    }
  }
}

struct MatchingSearch {
  const SpaInstance& instance;
  const std::optional<int> wanted_size;
  const ProfileOrder order;
  const bool constrained;
  const OracleBudget& budget;

  std::vector<int> project_load;
  std::vector<int> lecturer_load;
  std::vector<int> assignment;
  long long nodes = 0;

  int best_size = -1;
  std::optional<OracleResult> best;

  explicit MatchingSearch(const SpaInstance& instance_, std::optional<int> k,
                          ProfileOrder order_, bool constrained_,
                          const OracleBudget& budget_)
      : instance(instance_),
        wanted_size(k),
        order(order_),
        constrained(constrained_),
        budget(budget_) {
    project_load.assign(static_cast<std::size_t>(instance.project_count()), 0);
    lecturer_load.assign(static_cast<std::size_t>(instance.lecturer_count()), 0);
    assignment.assign(static_cast<std::size_t>(instance.student_count()), -1);
  }

  void consider_leaf(int size) {
    if (wanted_size && size != *wanted_size) return;
    if (constrained) {
      for (const auto& l : instance.lecturers()) {
        if (lecturer_load[static_cast<std::size_t>(l.id)] < l.lower_quota) return;
      }
    }
    Profile profile = Profile::zeros(instance.max_rank());
    for (int i = 0; i < instance.student_count(); ++i) {
      const int j = assignment[static_cast<std::size_t>(i)];
      if (j >= 0) ++profile.values[static_cast<std::size_t>(instance.rank_of(i, j) - 1)];
    }
    const bool improves =
        !best || (!wanted_size && size > best_size) ||
        ((wanted_size || size == best_size) &&
         profile_better(profile, best->profile, order));
    if (improves) {
      best_size = size;
      Matching witness;
      witness.project_of = assignment;
      best = OracleResult{std::move(profile), std::move(witness)};
    }
  }

  void recurse(int student, int size) {
    if (++nodes > budget.node_limit) {
      throw BudgetError("oracle enumeration exceeded the node limit");
    }
    if (student == instance.student_count()) {
      consider_leaf(size);
      return;
    }
    for (const auto& e : instance.preference_edges(student)) {
      const int j = e.project;
      const int k = instance.projects()[static_cast<std::size_t>(j)].lecturer;
      if (project_load[static_cast<std::size_t>(j)] >=
          instance.projects()[static_cast<std::size_t>(j)].capacity) {
        continue;
      }
      if (lecturer_load[static_cast<std::size_t>(k)] >=
          instance.lecturers()[static_cast<std::size_t>(k)].upper_quota) {
        continue;
      }
      ++project_load[static_cast<std::size_t>(j)];
      ++lecturer_load[static_cast<std::size_t>(k)];
      assignment[static_cast<std::size_t>(student)] = j;
      recurse(student + 1, size + 1);
      assignment[static_cast<std::size_t>(student)] = -1;
      --project_load[static_cast<std::size_t>(j)];
      --lecturer_load[static_cast<std::size_t>(k)];
    }
    recurse(student + 1, size);  // leave the student unmatched
  }
};

struct PathSearch {
  const FlowNetwork& network;
  const Flow& flow;
  const ProfileOrder order;
  const OracleBudget& budget;

  std::vector<std::vector<int>> students_of;
  std::vector<bool> on_path_project;
  std::vector<bool> on_path_lecturer;
  long long nodes = 0;
  PathEnumeration out;

  PathSearch(const FlowNetwork& network_, const Flow& flow_, ProfileOrder order_,
             const OracleBudget& budget_)
      : network(network_), flow(flow_), order(order_), budget(budget_) {
    const auto& inst = network.instance();
    students_of.assign(static_cast<std::size_t>(inst.project_count()), {});
    for (int s = 0; s < inst.student_count(); ++s) {
      const int j = flow.project_of[static_cast<std::size_t>(s)];
      if (j >= 0) students_of[static_cast<std::size_t>(j)].push_back(s);
    }
    on_path_project.assign(static_cast<std::size_t>(inst.project_count()), false);
    on_path_lecturer.assign(static_cast<std::size_t>(inst.lecturer_count()), false);
    out.partial_profiles.assign(static_cast<std::size_t>(inst.project_count()), {});
  }

  void record(int project, const Profile& profile) {
    auto& seen = out.partial_profiles[static_cast<std::size_t>(project)];
    if (std::find(seen.begin(), seen.end(), profile) == seen.end()) {
      seen.push_back(profile);
    }
    // Candidate full path: extendable through the project's own lecturer.
    const int k = network.lecturer_of(project);
    if (!on_path_lecturer[static_cast<std::size_t>(k)] &&
        exposed_project(network, flow, project)) {
      if (!out.best_full || profile_better(profile, *out.best_full, order)) {
        out.best_full = profile;
      }
    }
  }

  // Arrives at `project` with the prefix profile; explores continuations.
  void visit(int project, Profile profile) {
    if (++nodes > budget.node_limit) {
      throw BudgetError("path enumeration exceeded the node limit");
    }
    const auto& inst = network.instance();
    on_path_project[static_cast<std::size_t>(project)] = true;
    record(project, profile);

    // Backward through a matched student, forward to another of her projects.
    for (int s : students_of[static_cast<std::size_t>(project)]) {
      const int back_rank = inst.rank_of(s, project);
      for (const auto& e : inst.preference_edges(s)) {
        if (e.project == project) continue;
        if (on_path_project[static_cast<std::size_t>(e.project)]) continue;
        Profile extended = profile;
        --extended.values[static_cast<std::size_t>(back_rank - 1)];
        ++extended.values[static_cast<std::size_t>(e.rank - 1)];
        visit(e.project, std::move(extended));
      }
    }

    // Across the project's lecturer: forward into the lecturer, backward out
    // of a sibling that carries flow.
    const int k = network.lecturer_of(project);
    if (!on_path_lecturer[static_cast<std::size_t>(k)] &&
        flow.project_load[static_cast<std::size_t>(project)] <
            network.project_cap(project)) {
      on_path_lecturer[static_cast<std::size_t>(k)] = true;
      for (int sibling : inst.lecturer_projects(k)) {
        if (sibling == project) continue;
        if (on_path_project[static_cast<std::size_t>(sibling)]) continue;
        if (flow.project_load[static_cast<std::size_t>(sibling)] <= 0) continue;
        visit(sibling, profile);
      }
      on_path_lecturer[static_cast<std::size_t>(k)] = false;
    }

    on_path_project[static_cast<std::size_t>(project)] = false;
  }

  void run() {
    const auto& inst = network.instance();
    for (int s = 0; s < inst.student_count(); ++s) {
      if (!exposed_student(flow, s)) continue;
      for (const auto& e : inst.preference_edges(s)) {
        Profile start = Profile::zeros(inst.max_rank());
        ++start.values[static_cast<std::size_t>(e.rank - 1)];
        visit(e.project, std::move(start));
      }
    }
  }
};

}  // namespace

std::optional<OracleResult> enumerate_best(const SpaInstance& instance,
                                           std::optional<int> k,
                                           ProfileOrder order, bool constrained,
                                           const OracleBudget& budget) {
  check_budget(instance, budget);
  MatchingSearch search(instance, k, order, constrained, budget);
  search.recurse(0, 0);
  return search.best;
}

PathEnumeration enumerate_paths(const FlowNetwork& network, const Flow& flow,
                                ProfileOrder order, const OracleBudget& budget) {
  check_budget(network.instance(), budget);
  PathSearch search(network, flow, order, budget);
  search.run();
  return search.out;
}

std::optional<Profile> enumerate_best_path(const FlowNetwork& network,
                                           const Flow& flow, ProfileOrder order,
                                           const OracleBudget& budget) {
  return enumerate_paths(network, flow, order, budget).best_full;
}

}  // namespace spa
