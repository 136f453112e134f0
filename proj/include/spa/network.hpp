#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "spa/instance.hpp"
#include "spa/profile.hpp"

namespace spa {

// The four-layer network: source -> students (cap 1) -> projects (cap 1 per
// acceptable pair) -> lecturers (cap c_j) -> sink (cap d_k^+). Capacities on
// the project->lecturer and lecturer->sink edges live here rather than being
// read off the instance, so phase networks with altered lecturer quotas can
// share one instance. The network borrows the instance; keep the instance
// alive for the network's lifetime.
class FlowNetwork {
 public:
  explicit FlowNetwork(const SpaInstance& instance);
  FlowNetwork(const SpaInstance& instance, std::vector<int> lecturer_caps);

  const SpaInstance& instance() const { return *instance_; }

  int node_count() const;  // 2 + n1 + n2 + n3
  int edge_count() const;  // n1 + m2 + n2 + n3

  int project_cap(int project) const {
    return project_cap_[static_cast<std::size_t>(project)];
  }
  int lecturer_cap(int lecturer) const {
    return lecturer_cap_[static_cast<std::size_t>(lecturer)];
  }
  int lecturer_of(int project) const {
    return instance_->projects()[static_cast<std::size_t>(project)].lecturer;
  }

  void dump_edges(std::ostream& out) const;

 private:
  const SpaInstance* instance_ = nullptr;
  std::vector<int> project_cap_;
  std::vector<int> lecturer_cap_;
};

// Integral flow on the network. Every conserving integral flow factors
// through a matching, so the flow is stored as the matched project per
// student together with the implied per-project and per-lecturer loads.
struct Flow {
  std::vector<int> project_of;     // f(s_i, p_j) = 1 edges, -1 = exposed
  std::vector<int> project_load;   // f(p_j, l(p_j)) = |M(p_j)|
  std::vector<int> lecturer_load;  // f(l_k, v_t)   = |M(l_k)|
  int value = 0;                   // |f|

  friend bool operator==(const Flow&, const Flow&) = default;
};

Flow empty_flow(const FlowNetwork& network);

// Conversions per the f(M) / M(f) correspondence; round-trips are identities.
// matching_from_flow rejects structurally inconsistent flows, and
// flow_from_matching rejects matchings that break the network capacities.
Matching matching_from_flow(const FlowNetwork& network, const Flow& flow);
Flow flow_from_matching(const FlowNetwork& network, const Matching& matching);

inline bool exposed_student(const Flow& flow, int student) {
  return flow.project_of[static_cast<std::size_t>(student)] < 0;
}

// Exposed = slack in both the project capacity and its lecturer's quota.
bool exposed_project(const FlowNetwork& network, const Flow& flow, int project);

// Augmenting path: source, student, project, then alternating connector
// (student or lecturer) and project, ending with the terminal project's
// lecturer and the sink. The profile is the path profile (may be negative in
// components).
struct AugPath {
  enum class NodeKind : std::uint8_t { source, student, project, lecturer, sink };
  struct Node {
    NodeKind kind;
    int id;
    friend bool operator==(const Node&, const Node&) = default;
  };
  std::vector<Node> nodes;
  Profile profile;
};

std::string to_string(const AugPath& path);

// Validates the whole path against the current flow, then applies it; the
// flow is untouched when validation fails (ContractError).
void augment(const FlowNetwork& network, Flow& flow, const AugPath& path);

}  // namespace spa
