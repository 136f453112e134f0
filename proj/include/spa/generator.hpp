#pragma once

#include <cstdint>

#include "spa/instance.hpp"

namespace spa {

// Random instance parameters. Defaults mirror the benchmark configuration:
// 100 students, projects and lecturers at 30% of that, uniform list length
// 10, popularity ratio 5, total capacities at 120% of the student count, no
// ties, no lower quotas.
struct GenConfig {
  int n1 = 100;
  int n2 = 30;
  int n3 = 30;
  int r_min = 10;
  int r_max = 10;
  double popularity = 5.0;  // application ratio most- vs least-popular project
  int total_project_cap = 120;   // C_P, split unevenly, >= 1 per project
  int total_lecturer_cap = 120;  // C_L, split unevenly, >= max(lower, 1) each
  double tie_density = 0.0;      // probability an entry ties with its predecessor
  int total_project_lower = 0;   // accepted for config compatibility; must be 0
  int total_lecturer_lower = 0;  // L_L, split evenly across lecturers
  std::uint64_t seed = 0;

  // Derives the dependent fields from a student count.
  static GenConfig defaults_for(int n1);
};

// Deterministic given the config (including the seed): preference lists are
// weighted samples without replacement, weights linear from 1 up to
// `popularity` across project ids; capacities are uniform random
// compositions; lower quotas split evenly. The result always passes
// validate(). Throws ConfigError for unsatisfiable parameters.
SpaInstance generate(const GenConfig& config);

}  // namespace spa
