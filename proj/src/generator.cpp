#include "spa/generator.hpp"

#include <algorithm>
#include <string>

#include "spa/errors.hpp"
#include "spa/rng.hpp"

namespace spa {

namespace {

void check_config(const GenConfig& c) {
  auto fail = [](const std::string& why) { throw ConfigError("generator: " + why); };
  if (c.n1 < 1 || c.n2 < 1 || c.n3 < 1) fail("counts must be positive");
  if (c.r_min < 1 || c.r_min > c.r_max) fail("need 1 <= r_min <= r_max");
  if (c.r_max > c.n2) {
    fail("r_max " + std::to_string(c.r_max) + " exceeds project count " +
         std::to_string(c.n2));
  }
  if (c.popularity < 1.0) fail("popularity ratio must be >= 1");
  if (c.tie_density < 0.0 || c.tie_density > 1.0) fail("tie density must be in [0,1]");
  if (c.total_project_cap < c.n2) {
    fail("total project capacity " + std::to_string(c.total_project_cap) +
         " cannot give every one of " + std::to_string(c.n2) +
         " projects capacity >= 1");
  }
  if (c.total_project_lower != 0) {
    fail("project lower quotas are not supported; only lecturers carry them");
  }
  if (c.total_lecturer_lower < 0) fail("negative total lecturer lower quota");
}

// Uneven random split of `total` into `parts` pieces with the given
// per-piece floors: each unit of slack above the floors lands on a uniformly
// random piece.
std::vector<int> random_composition(Rng& rng, int total, const std::vector<int>& floors) {
  const std::size_t parts = floors.size();
  std::vector<int> out = floors;
  int slack = total;
  for (int f : floors) slack -= f;
  for (int unit = 0; unit < slack; ++unit) {
    ++out[static_cast<std::size_t>(rng.below(parts))];
  }
  return out;
}

}  // namespace

GenConfig GenConfig::defaults_for(int n1) {
  GenConfig c;
  c.n1 = n1;
  c.n2 = (3 * n1) / 10;
  c.n3 = (3 * n1) / 10;
  c.total_project_cap = (12 * n1) / 10;
  c.total_lecturer_cap = (12 * n1) / 10;
  return c;
}

SpaInstance generate(const GenConfig& config) {
  check_config(config);
  Rng rng(config.seed);

  const int n1 = config.n1;
  const int n2 = config.n2;
  const int n3 = config.n3;

  // Linear popularity weights, 1 for project 1 up to lambda for project n2.
  std::vector<double> weight(static_cast<std::size_t>(n2), 1.0);
  for (int j = 0; j < n2; ++j) {
    weight[static_cast<std::size_t>(j)] =
        n2 == 1 ? 1.0
                : 1.0 + (config.popularity - 1.0) * static_cast<double>(j) /
                            static_cast<double>(n2 - 1);
  }

  std::vector<Student> students;
  students.reserve(static_cast<std::size_t>(n1));
  std::vector<int> drawn;
  std::vector<char> taken(static_cast<std::size_t>(n2), 0);
  for (int i = 0; i < n1; ++i) {
    const int length = rng.range(config.r_min, config.r_max);

    // Weighted sampling without replacement: each draw picks among the
    // remaining projects proportionally to weight.
    drawn.clear();
    std::fill(taken.begin(), taken.end(), 0);
    double remaining_weight = 0.0;
    for (double w : weight) remaining_weight += w;
    for (int pick = 0; pick < length; ++pick) {
      double target = rng.real01() * remaining_weight;
      int chosen = -1;
      for (int j = 0; j < n2; ++j) {
        if (taken[static_cast<std::size_t>(j)]) continue;
        chosen = j;
        target -= weight[static_cast<std::size_t>(j)];
        if (target < 0.0) break;
      }
      taken[static_cast<std::size_t>(chosen)] = 1;
      remaining_weight -= weight[static_cast<std::size_t>(chosen)];
      drawn.push_back(chosen);
    }

    Student s;
    s.id = i;
    for (std::size_t at = 0; at < drawn.size(); ++at) {
      if (at > 0 && rng.real01() < config.tie_density) {
        s.pref_groups.back().push_back(drawn[at]);
      } else {
        s.pref_groups.push_back({drawn[at]});
      }
    }
    students.push_back(std::move(s));
  }

  // Capacities: uneven random splits, floor 1 per project and
  // max(lower quota, 1) per lecturer so the quota invariant always holds.
  const std::vector<int> project_caps = random_composition(
      rng, config.total_project_cap, std::vector<int>(static_cast<std::size_t>(n2), 1));

  // Lecturer ownership: every lecturer receives a project while any remain
  // (capacity behind an offering-less lecturer would be unusable and the
  // benchmark instances would stop being contested); extra projects go to
  // uniformly random lecturers.
  std::vector<int> owner(static_cast<std::size_t>(n2));
  {
    std::vector<int> order(static_cast<std::size_t>(n2));
    for (int j = 0; j < n2; ++j) order[static_cast<std::size_t>(j)] = j;
    for (int j = 0; j < n2; ++j) {
      const int pick = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(n2 - j)));
      std::swap(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(pick)]);
    }
    for (int at = 0; at < n2; ++at) {
      owner[static_cast<std::size_t>(order[static_cast<std::size_t>(at)])] =
          at < n3 ? at : static_cast<int>(rng.below(static_cast<std::uint64_t>(n3)));
    }
  }

  std::vector<int> lecturer_lower(static_cast<std::size_t>(n3),
                                  config.total_lecturer_lower / n3);
  for (int k = 0; k < config.total_lecturer_lower % n3; ++k) {
    ++lecturer_lower[static_cast<std::size_t>(k)];
  }
  std::vector<int> lecturer_floors(static_cast<std::size_t>(n3));
  int floor_total = 0;
  for (int k = 0; k < n3; ++k) {
    lecturer_floors[static_cast<std::size_t>(k)] =
        std::max(lecturer_lower[static_cast<std::size_t>(k)], 1);
    floor_total += lecturer_floors[static_cast<std::size_t>(k)];
  }
  if (config.total_lecturer_cap < floor_total) {
    throw ConfigError(
        "generator: total lecturer capacity " +
        std::to_string(config.total_lecturer_cap) +
        " is below the required minimum " + std::to_string(floor_total));
  }
  // Quotas follow the capacity each lecturer owns (largest-remainder
  // proportional split of the slack): quota behind a low-capacity portfolio
  // or capacity behind a low-quota lecturer would both be unusable. The
  // unevenness is inherited from the ownership and capacity draws.
  std::vector<int> lecturer_caps = lecturer_floors;
  {
    std::vector<double> owned(static_cast<std::size_t>(n3), 0.0);
    double owned_total = 0.0;
    for (int j = 0; j < n2; ++j) {
      owned[static_cast<std::size_t>(owner[static_cast<std::size_t>(j)])] +=
          project_caps[static_cast<std::size_t>(j)];
      owned_total += project_caps[static_cast<std::size_t>(j)];
    }
    const int slack = config.total_lecturer_cap - floor_total;
    std::vector<std::pair<double, int>> remainder(static_cast<std::size_t>(n3));
    int assigned = 0;
    for (int k = 0; k < n3; ++k) {
      const double exact = slack * owned[static_cast<std::size_t>(k)] / owned_total;
      const int whole = static_cast<int>(exact);
      lecturer_caps[static_cast<std::size_t>(k)] += whole;
      assigned += whole;
      remainder[static_cast<std::size_t>(k)] = {exact - whole, k};
    }
    std::sort(remainder.begin(), remainder.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first > b.first : a.second < b.second;
              });
    for (int extra = 0; extra < slack - assigned; ++extra) {
      ++lecturer_caps[static_cast<std::size_t>(
          remainder[static_cast<std::size_t>(extra)].second)];
    }
    // Roughen the proportional split with a few random unit moves so some
    // instances stay contested on the lecturer side.
    for (int m = 0; m < n3 / 3 + 1; ++m) {
      const std::size_t donor = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n3)));
      const std::size_t receiver = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n3)));
      if (lecturer_caps[donor] > lecturer_floors[donor]) {
        --lecturer_caps[donor];
        ++lecturer_caps[receiver];
      }
    }
  }

  std::vector<Project> projects;
  projects.reserve(static_cast<std::size_t>(n2));
  for (int j = 0; j < n2; ++j) {
    Project p;
    p.id = j;
    p.capacity = project_caps[static_cast<std::size_t>(j)];
    p.lecturer = owner[static_cast<std::size_t>(j)];
    projects.push_back(p);
  }

  std::vector<Lecturer> lecturers;
  lecturers.reserve(static_cast<std::size_t>(n3));
  for (int k = 0; k < n3; ++k) {
    Lecturer l;
    l.id = k;
    l.upper_quota = lecturer_caps[static_cast<std::size_t>(k)];
    l.lower_quota = lecturer_lower[static_cast<std::size_t>(k)];
    lecturers.push_back(l);
  }

  SpaInstance instance(std::move(students), std::move(projects), std::move(lecturers));
  if (!validate(instance).ok()) {
    throw InternalError("generator produced an invalid instance:\n" +
                        validate(instance).to_string());
  }
  return instance;
}

}  // namespace spa
