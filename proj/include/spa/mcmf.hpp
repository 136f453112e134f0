#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spa/instance.hpp"
#include "spa/solver.hpp"

namespace spa {

// Edge cost schemes on the student-project edges; all other edges cost 0.
// greedy_exp: n1^(R-1) - n1^(R-k); generous_exp: n1^(k-1); rank: k, where
// k is the rank of the pair. All are non-negative and increase with rank.
enum class CostScheme { greedy_exp, generous_exp, rank };

// exact = arbitrary-precision integers (never overflows); float64 = IEEE
// doubles, which deliberately reproduce the precision failures that make
// exponential-weight flow formulations unreliable at scale.
enum class ArithmeticMode { exact, float64 };

const char* to_string(CostScheme scheme);
const char* to_string(ArithmeticMode mode);

// Cost of a rank-k student-project edge under the scheme, in decimal (values
// overflow any machine integer for large n1 and R).
std::string scheme_cost_decimal(CostScheme scheme, int n1, int R, int rank);

// Minimum-cost maximum flow by successive shortest augmenting paths with a
// label-correcting search and potentials. In exact mode greedy_exp
// reproduces the greedy-optimal profile, generous_exp the generous-optimal
// one, and rank minimises cost over maximum matchings. float64 mode may
// silently return a suboptimal matching; that is the experiment.
SolveResult solve_mcmf(const SpaInstance& instance, CostScheme scheme,
                       ArithmeticMode mode);

// Number of `trials` generated instances at (n1, R) whose MCMF matching
// profile differs from the exact profile-solver result for the scheme.
// The rank scheme is rejected: rank-cost optima are not profile-unique.
int count_disagreements(int n1, int R, int trials, CostScheme scheme,
                        ArithmeticMode mode, std::uint64_t master_seed);

// For each n1, the smallest R (ascending over r_values) at which the chosen
// mode's matching profile disagrees with the exact profile-solver result on
// any of `trials` generated instances; nullopt when none disagree.
struct FeasibilityCell {
  int n1 = 0;
  std::optional<int> first_disagreement_R;
  int trials = 0;
  CostScheme scheme = CostScheme::greedy_exp;
  ArithmeticMode mode = ArithmeticMode::float64;
};

std::vector<FeasibilityCell> feasibility_sweep(const std::vector<int>& n1_values,
                                               const std::vector<int>& r_values,
                                               int trials, CostScheme scheme,
                                               ArithmeticMode mode,
                                               std::uint64_t master_seed);

// CSV rows: n1,R_first_disagreement,trials,scheme,mode
std::string feasibility_csv(const std::vector<FeasibilityCell>& cells);

}  // namespace spa
