#pragma once

#include <optional>
#include <vector>

#include "spa/instance.hpp"
#include "spa/network.hpp"

namespace spa {

// Exhaustive enumeration is the ground truth for the solvers on small
// instances; it shares no search logic with them on purpose.
struct OracleBudget {
  int max_students = 8;
  int max_list_len = 4;
  long long node_limit = 200'000'000;  // recursion steps before giving up
};

struct OracleResult {
  Profile profile;
  Matching matching;  // first witness in student-major enumeration order
};

// Best matching by plain depth-first assignment of each student to each
// acceptable project or to nothing, pruning only on capacity violations.
// k = nullopt maximises size first; a concrete k restricts to matchings of
// exactly that size. constrained additionally requires every lecturer to
// reach her lower quota. Returns nothing when no feasible matching of the
// requested size exists. Throws BudgetError past the budget.
std::optional<OracleResult> enumerate_best(const SpaInstance& instance,
                                           std::optional<int> k,
                                           ProfileOrder order,
                                           bool constrained,
                                           const OracleBudget& budget = {});

// All alternating-path profiles reachable from exposed students, by DFS over
// simple paths that respect residual capacities. A full path must end at an
// exposed project whose lecturer the path has not crossed, so its closing
// edges keep the path simple.
struct PathEnumeration {
  // Distinct profiles of partial (prefix) paths per project.
  std::vector<std::vector<Profile>> partial_profiles;
  // Best full augmenting-path profile under the order, if any path exists.
  std::optional<Profile> best_full;
};

PathEnumeration enumerate_paths(const FlowNetwork& network, const Flow& flow,
                                ProfileOrder order,
                                const OracleBudget& budget = {});

// Best full augmenting-path profile, or nothing when the flow is maximum.
std::optional<Profile> enumerate_best_path(const FlowNetwork& network,
                                           const Flow& flow, ProfileOrder order,
                                           const OracleBudget& budget = {});

}  // namespace spa
