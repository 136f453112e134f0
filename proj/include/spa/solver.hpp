#pragma once

#include <functional>
#include <optional>

#include "spa/augmenting_search.hpp"
#include "spa/instance.hpp"
#include "spa/network.hpp"

namespace spa {

struct SolveOptions {
  std::function<void(const std::string&)> trace;  // forwarded to the search
};

struct SolveResult {
  // Absent only when a lower-quota instance admits no constrained matching.
  std::optional<Matching> matching;
  MatchStats stats;        // zeros when no matching
  int iterations = 0;      // augmentations performed
  double elapsed_s = 0.0;  // wall time of the whole solve
};

// Maximum matching with the left-order (greedy) optimal profile. Requires a
// validated instance with all lecturer lower quotas zero; ContractError
// otherwise.
SolveResult greedy_max(const SpaInstance& instance, const SolveOptions& = {});

// Maximum matching with the right-order (generous) optimal profile.
SolveResult generous_max(const SpaInstance& instance, const SolveOptions& = {});

// Lower-quota variants: phase 1 solves a copy whose lecturer capacities are
// the lower quotas; when that saturates every quota, phase 2 lifts the flow
// into the full network and keeps augmenting. Returns an empty result when
// the quotas cannot be met.
SolveResult greedy_max_constrained(const SpaInstance& instance,
                                   const SolveOptions& = {});
SolveResult generous_max_constrained(const SpaInstance& instance,
                                     const SolveOptions& = {});

// Plain breadth-first augmenting max-flow on the network, independent of the
// profile machinery. Used as the size-maximality cross-check after every
// solve and by the CLI's verify subcommand.
int max_matching_size(const FlowNetwork& network);

}  // namespace spa
