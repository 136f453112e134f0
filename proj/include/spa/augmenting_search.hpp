#pragma once

#include <functional>
#include <optional>

#include "spa/network.hpp"

namespace spa {

struct SearchOptions {
  // One line per label update plus the final selection; used by the CLI's
  // --verbose mode and the trace tests.
  std::function<void(const std::string&)> trace;
  // When set, receives the final per-project labels (test hook).
  std::vector<Profile>* capture_labels = nullptr;
};

// Maximum-profile (left order) augmenting path with respect to the flow, or
// nothing when the flow is already maximum. The flow must induce a greedy
// |f|-matching; reconstruction failures under that contract are bugs and
// raise InternalError.
std::optional<AugPath> find_max_profile_aug_path(const FlowNetwork& network,
                                                 const Flow& flow,
                                                 const SearchOptions& options = {});

// Minimum-profile (right order) mirror; the flow must induce a generous
// |f|-matching.
std::optional<AugPath> find_min_profile_aug_path(const FlowNetwork& network,
                                                 const Flow& flow,
                                                 const SearchOptions& options = {});

std::optional<AugPath> find_optimal_aug_path(const FlowNetwork& network,
                                             const Flow& flow,
                                             ProfileOrder order,
                                             const SearchOptions& options = {});

}  // namespace spa
