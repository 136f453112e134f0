#include "spa/instance.hpp"

#include <algorithm>
#include <sstream>

#include "spa/errors.hpp"

namespace spa {

SpaInstance::SpaInstance(std::vector<Student> students,
                         std::vector<Project> projects,
                         std::vector<Lecturer> lecturers)
    : students_(std::move(students)),
      projects_(std::move(projects)),
      lecturers_(std::move(lecturers)) {
  const int n1 = student_count();
  const int n2 = project_count();
  const int n3 = lecturer_count();

  pref_edges_.assign(static_cast<std::size_t>(n1), {});
  rank_table_.assign(static_cast<std::size_t>(n1),
                     std::vector<int>(static_cast<std::size_t>(n2), -1));
  lecturer_projects_.assign(static_cast<std::size_t>(n3), {});

  max_rank_ = 1;
  total_pref_length_ = 0;
  for (int i = 0; i < n1; ++i) {
    int next_rank = 1;
    for (const auto& group : students_[static_cast<std::size_t>(i)].pref_groups) {
      for (int p : group) {
        ++total_pref_length_;
        if (p < 0 || p >= n2) continue;  // reported by validate()
        auto& cell = rank_table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
        if (cell != -1) continue;  // duplicate, reported by validate()
        cell = next_rank;
        pref_edges_[static_cast<std::size_t>(i)].push_back({p, next_rank});
        max_rank_ = std::max(max_rank_, next_rank);
      }
      next_rank += static_cast<int>(group.size());
    }
  }

  for (int j = 0; j < n2; ++j) {
    const int k = projects_[static_cast<std::size_t>(j)].lecturer;
    if (k >= 0 && k < n3) {
      lecturer_projects_[static_cast<std::size_t>(k)].push_back(j);
    }
  }
}

bool SpaInstance::is_acceptable(int student, int project) const {
  if (student < 0 || student >= student_count()) return false;
  if (project < 0 || project >= project_count()) return false;
  return rank_table_[static_cast<std::size_t>(student)]
                    [static_cast<std::size_t>(project)] != -1;
}

int SpaInstance::rank_of(int student, int project) const {
  if (!is_acceptable(student, project)) {
    throw ContractError("project " + std::to_string(project + 1) +
                        " is not acceptable to student " +
                        std::to_string(student + 1));
  }
  return rank_table_[static_cast<std::size_t>(student)]
                    [static_cast<std::size_t>(project)];
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << (v.severity == Violation::Severity::error ? "error" : "warning")
        << " [" << v.where << "]: " << v.message << '\n';
  }
  return out.str();
}

ValidationReport validate(const SpaInstance& instance) {
  ValidationReport report;
  auto error = [&](std::string where, std::string message) {
    report.violations.push_back(
        {Violation::Severity::error, std::move(where), std::move(message)});
  };
  auto warning = [&](std::string where, std::string message) {
    report.violations.push_back(
        {Violation::Severity::warning, std::move(where), std::move(message)});
  };

  const int n2 = instance.project_count();
  const int n3 = instance.lecturer_count();

  for (const auto& s : instance.students()) {
    const std::string where = "student " + std::to_string(s.id + 1);
    std::vector<bool> seen(static_cast<std::size_t>(n2), false);
    for (const auto& group : s.pref_groups) {
      if (group.empty()) error(where, "empty tie group");
      for (int p : group) {
        if (p < 0 || p >= n2) {
          error(where, "unknown project " + std::to_string(p + 1));
          continue;
        }
        if (seen[static_cast<std::size_t>(p)]) {
          error(where, "project " + std::to_string(p + 1) +
                           " appears twice in the preference list");
        }
        seen[static_cast<std::size_t>(p)] = true;
      }
    }
  }

  for (const auto& p : instance.projects()) {
    const std::string where = "project " + std::to_string(p.id + 1);
    if (p.lecturer < 0 || p.lecturer >= n3) {
      error(where, "unknown lecturer " + std::to_string(p.lecturer + 1));
    }
    if (p.capacity < 0) {
      error(where, "negative capacity");
    } else if (p.capacity == 0) {
      warning(where, "zero capacity; the project can never be matched");
    }
  }

  for (const auto& l : instance.lecturers()) {
    const std::string where = "lecturer " + std::to_string(l.id + 1);
    if (l.lower_quota < 0) error(where, "negative lower quota");
    if (l.upper_quota < std::max(l.lower_quota, 1)) {
      error(where, "upper quota " + std::to_string(l.upper_quota) +
                       " below max(lower quota, 1) = " +
                       std::to_string(std::max(l.lower_quota, 1)));
    }
  }

  return report;
}

std::vector<std::string> check_matching(const SpaInstance& instance,
                                        const Matching& matching) {
  std::vector<std::string> problems;
  const int n1 = instance.student_count();
  const int n2 = instance.project_count();
  const int n3 = instance.lecturer_count();

  if (static_cast<int>(matching.project_of.size()) != n1) {
    problems.push_back("assignment covers " +
                       std::to_string(matching.project_of.size()) +
                       " students, instance has " + std::to_string(n1));
    return problems;
  }

  std::vector<int> project_load(static_cast<std::size_t>(n2), 0);
  std::vector<int> lecturer_load(static_cast<std::size_t>(n3), 0);
  for (int i = 0; i < n1; ++i) {
    const int j = matching.project_of[static_cast<std::size_t>(i)];
    if (j < 0) continue;
    if (j >= n2) {
      problems.push_back("student " + std::to_string(i + 1) +
                         " assigned to unknown project " + std::to_string(j + 1));
      continue;
    }
    if (!instance.is_acceptable(i, j)) {
      problems.push_back("pair (s" + std::to_string(i + 1) + ", p" +
                         std::to_string(j + 1) + ") is not acceptable");
    }
    ++project_load[static_cast<std::size_t>(j)];
    const int k = instance.projects()[static_cast<std::size_t>(j)].lecturer;
    if (k >= 0 && k < n3) ++lecturer_load[static_cast<std::size_t>(k)];
  }
  for (int j = 0; j < n2; ++j) {
    if (project_load[static_cast<std::size_t>(j)] >
        instance.projects()[static_cast<std::size_t>(j)].capacity) {
      problems.push_back("project " + std::to_string(j + 1) + " over capacity: " +
                         std::to_string(project_load[static_cast<std::size_t>(j)]) +
                         " > " +
                         std::to_string(instance.projects()[static_cast<std::size_t>(j)].capacity));
    }
  }
  for (int k = 0; k < n3; ++k) {
    if (lecturer_load[static_cast<std::size_t>(k)] >
        instance.lecturers()[static_cast<std::size_t>(k)].upper_quota) {
      problems.push_back("lecturer " + std::to_string(k + 1) + " over quota: " +
                         std::to_string(lecturer_load[static_cast<std::size_t>(k)]) +
                         " > " +
                         std::to_string(instance.lecturers()[static_cast<std::size_t>(k)].upper_quota));
    }
  }
  return problems;
}

MatchStats matching_stats(const SpaInstance& instance, const Matching& matching) {
  auto problems = check_matching(instance, matching);
  if (!problems.empty()) {
    throw ValidationError("invalid matching: " + problems.front());
  }
  MatchStats stats;
  stats.profile = Profile::zeros(instance.max_rank());
  for (int i = 0; i < instance.student_count(); ++i) {
    const int j = matching.project_of[static_cast<std::size_t>(i)];
    if (j < 0) continue;
    ++stats.size;
    ++stats.profile.values[static_cast<std::size_t>(instance.rank_of(i, j) - 1)];
  }
  stats.cost = cost(stats.profile);
  stats.degree = degree(stats.profile);
  return stats;
}

}  // namespace spa
