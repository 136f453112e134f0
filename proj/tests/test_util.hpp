#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "spa/generator.hpp"
#include "spa/instance.hpp"
#include "spa/instance_io.hpp"
#include "spa/rng.hpp"

namespace spa::test {

inline std::string data_path(const std::string& name) {
  return std::string(SPA_TEST_DATA_DIR) + "/" + name;
}

inline std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

inline SpaInstance figure1() { return load_instance(data_path("figure1.spa")); }
inline SpaInstance figure2() { return load_instance(data_path("figure2.spa")); }

inline Profile profile_of(std::vector<int> values) {
  Profile p;
  p.values.assign(values.begin(), values.end());
  return p;
}

// Random profile with components in [-bound, bound].
inline Profile random_profile(Rng& rng, int ranks, int bound) {
  Profile p = Profile::zeros(ranks);
  for (auto& v : p.values) v = rng.range(-bound, bound);
  return p;
}

// Small random instance for property tests: includes zero-capacity projects
// and empty preference lists occasionally, which the generator never emits.
inline SpaInstance random_tiny_instance(Rng& rng, int max_students = 6,
                                        int max_list = 4,
                                        bool with_lower_quotas = false) {
  const int n1 = rng.range(1, max_students);
  const int n2 = rng.range(1, 6);
  const int n3 = rng.range(1, 3);

  std::vector<Student> students;
  for (int i = 0; i < n1; ++i) {
    Student s;
    s.id = i;
    const int len = rng.range(0, std::min(max_list, n2));
    std::vector<int> pool(static_cast<std::size_t>(n2));
    for (int j = 0; j < n2; ++j) pool[static_cast<std::size_t>(j)] = j;
    for (int at = 0; at < len; ++at) {
      const int pick = at + static_cast<int>(rng.below(
                                static_cast<std::uint64_t>(n2 - at)));
      std::swap(pool[static_cast<std::size_t>(at)], pool[static_cast<std::size_t>(pick)]);
      if (at > 0 && rng.real01() < 0.25) {
        s.pref_groups.back().push_back(pool[static_cast<std::size_t>(at)]);
      } else {
        s.pref_groups.push_back({pool[static_cast<std::size_t>(at)]});
      }
    }
    students.push_back(std::move(s));
  }

  std::vector<Project> projects;
  for (int j = 0; j < n2; ++j) {
    Project p;
    p.id = j;
    p.capacity = rng.range(0, 3) == 0 ? 0 : rng.range(1, 3);
    p.lecturer = static_cast<int>(rng.below(static_cast<std::uint64_t>(n3)));
    projects.push_back(p);
  }

  std::vector<Lecturer> lecturers;
  for (int k = 0; k < n3; ++k) {
    Lecturer l;
    l.id = k;
    l.upper_quota = rng.range(1, 4);
    l.lower_quota = with_lower_quotas ? rng.range(0, l.upper_quota) : 0;
    lecturers.push_back(l);
  }

  return SpaInstance(std::move(students), std::move(projects), std::move(lecturers));
}

}  // namespace spa::test
