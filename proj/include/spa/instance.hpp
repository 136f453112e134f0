#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spa/profile.hpp"

namespace spa {

// Ids are 0-based in memory; the file format and all rendered output use
// 1-based ids.

struct Student {
  int id = 0;
  // Tie groups of project ids, strictly decreasing preference across groups.
  std::vector<std::vector<int>> pref_groups;

  friend bool operator==(const Student&, const Student&) = default;
};

struct Project {
  int id = 0;
  int capacity = 0;  // c_j
  int lecturer = 0;  // owning lecturer

  friend bool operator==(const Project&, const Project&) = default;
};

struct Lecturer {
  int id = 0;
  int upper_quota = 0;  // d_k^+
  int lower_quota = 0;  // d_k^-, 0 unless the instance carries lower quotas

  friend bool operator==(const Lecturer&, const Lecturer&) = default;
};

struct PrefEntry {
  int project = 0;
  int rank = 0;

  friend bool operator==(const PrefEntry&, const PrefEntry&) = default;
};

// Immutable after construction; safe to share across threads. Construction
// tolerates invalid data (validate() reports problems instead of throwing),
// so the caches skip out-of-range and duplicate preference entries.
class SpaInstance {
 public:
  SpaInstance() = default;
  SpaInstance(std::vector<Student> students, std::vector<Project> projects,
              std::vector<Lecturer> lecturers);

  int student_count() const { return static_cast<int>(students_.size()); }
  int project_count() const { return static_cast<int>(projects_.size()); }
  int lecturer_count() const { return static_cast<int>(lecturers_.size()); }

  const std::vector<Student>& students() const { return students_; }
  const std::vector<Project>& projects() const { return projects_; }
  const std::vector<Lecturer>& lecturers() const { return lecturers_; }

  // Maximum rank over all acceptable pairs, floored at 1 so profiles are
  // never zero-length.
  int max_rank() const { return max_rank_; }

  // Total preference list length over all students.
  int total_pref_length() const { return total_pref_length_; }

  bool is_acceptable(int student, int project) const;

  // 1 + number of projects the student strictly prefers; members of a tie
  // group share a rank. Throws ContractError for unacceptable pairs.
  int rank_of(int student, int project) const;

  // Acceptable (project, rank) pairs in preference-list order.
  const std::vector<PrefEntry>& preference_edges(int student) const {
    return pref_edges_[static_cast<std::size_t>(student)];
  }

  // Projects owned by a lecturer, ascending id.
  const std::vector<int>& lecturer_projects(int lecturer) const {
    return lecturer_projects_[static_cast<std::size_t>(lecturer)];
  }

  friend bool operator==(const SpaInstance& a, const SpaInstance& b) {
    return a.students_ == b.students_ && a.projects_ == b.projects_ &&
           a.lecturers_ == b.lecturers_;
  }

 private:
  std::vector<Student> students_;
  std::vector<Project> projects_;
  std::vector<Lecturer> lecturers_;

  // Derived; rebuilt in the constructor.
  int max_rank_ = 1;
  int total_pref_length_ = 0;
  std::vector<std::vector<PrefEntry>> pref_edges_;
  std::vector<std::vector<int>> rank_table_;  // [student][project], -1 = unacceptable
  std::vector<std::vector<int>> lecturer_projects_;
};

struct Violation {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string where;    // e.g. "student 3", "lecturer 1"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const {  // warnings do not make an instance invalid
    for (const auto& v : violations) {
      if (v.severity == Violation::Severity::error) return false;
    }
    return true;
  }
  std::string to_string() const;
};

// Checks every model invariant and returns all violations with locations.
ValidationReport validate(const SpaInstance& instance);

// Partial assignment of students to projects; -1 marks unmatched students.
struct Matching {
  std::vector<int> project_of;

  int size() const {
    int n = 0;
    for (int p : project_of) n += (p >= 0);
    return n;
  }

  friend bool operator==(const Matching&, const Matching&) = default;
};

struct MatchStats {
  int size = 0;
  Profile profile;
  std::int64_t cost = 0;
  int degree = 0;
};

// Lists every constraint the matching breaks (acceptability, project
// capacities, lecturer upper quotas); empty means valid.
std::vector<std::string> check_matching(const SpaInstance& instance,
                                        const Matching& matching);

// Size, profile, cost and degree of a valid matching. Throws ValidationError
// naming the violated constraint otherwise.
MatchStats matching_stats(const SpaInstance& instance, const Matching& matching);

}  // namespace spa
