#include "spa/network.hpp"

#include <cassert>
#include <ostream>
#include <sstream>

#include "spa/errors.hpp"

namespace spa {

FlowNetwork::FlowNetwork(const SpaInstance& instance) : instance_(&instance) {
  project_cap_.reserve(static_cast<std::size_t>(instance.project_count()));
  for (const auto& p : instance.projects()) project_cap_.push_back(p.capacity);
  lecturer_cap_.reserve(static_cast<std::size_t>(instance.lecturer_count()));
  for (const auto& l : instance.lecturers()) lecturer_cap_.push_back(l.upper_quota);
}

FlowNetwork::FlowNetwork(const SpaInstance& instance,
                         std::vector<int> lecturer_caps)
    : FlowNetwork(instance) {
  if (static_cast<int>(lecturer_caps.size()) != instance.lecturer_count()) {
    throw ContractError("lecturer cap override has wrong length");
  }
  lecturer_cap_ = std::move(lecturer_caps);
}

int FlowNetwork::node_count() const {
  return 2 + instance_->student_count() + instance_->project_count() +
         instance_->lecturer_count();
}

int FlowNetwork::edge_count() const {
  return instance_->student_count() + instance_->total_pref_length() +
         instance_->project_count() + instance_->lecturer_count();
}

void FlowNetwork::dump_edges(std::ostream& out) const {
  for (int i = 0; i < instance_->student_count(); ++i) {
    out << "source -> s" << i + 1 << " cap 1\n";
  }
  for (int i = 0; i < instance_->student_count(); ++i) {
    for (const auto& e : instance_->preference_edges(i)) {
      out << 's' << i + 1 << " -> p" << e.project + 1 << " cap 1 rank "
          << e.rank << '\n';
    }
  }
  for (int j = 0; j < instance_->project_count(); ++j) {
    out << 'p' << j + 1 << " -> l" << lecturer_of(j) + 1 << " cap "
        << project_cap(j) << '\n';
  }
  for (int k = 0; k < instance_->lecturer_count(); ++k) {
    out << 'l' << k + 1 << " -> sink cap " << lecturer_cap(k) << '\n';
  }
}

Flow empty_flow(const FlowNetwork& network) {
  const auto& inst = network.instance();
  Flow flow;
  flow.project_of.assign(static_cast<std::size_t>(inst.student_count()), -1);
  flow.project_load.assign(static_cast<std::size_t>(inst.project_count()), 0);
  flow.lecturer_load.assign(static_cast<std::size_t>(inst.lecturer_count()), 0);
  return flow;
}

namespace {

// Structural consistency: loads are exactly the per-project / per-lecturer
// tallies of the assignment (conservation), within the network capacities.
void check_flow(const FlowNetwork& network, const Flow& flow) {
  const auto& inst = network.instance();
  const int n1 = inst.student_count();
  if (static_cast<int>(flow.project_of.size()) != n1 ||
      static_cast<int>(flow.project_load.size()) != inst.project_count() ||
      static_cast<int>(flow.lecturer_load.size()) != inst.lecturer_count()) {
    throw ContractError("flow arrays do not match the network shape");
  }
  std::vector<int> project_tally(flow.project_load.size(), 0);
  std::vector<int> lecturer_tally(flow.lecturer_load.size(), 0);
  int value = 0;
  for (int i = 0; i < n1; ++i) {
    const int j = flow.project_of[static_cast<std::size_t>(i)];
    if (j < 0) continue;
    if (j >= inst.project_count() || !inst.is_acceptable(i, j)) {
      throw ContractError("flow uses a non-edge for student " +
                          std::to_string(i + 1));
    }
    ++value;
    ++project_tally[static_cast<std::size_t>(j)];
    ++lecturer_tally[static_cast<std::size_t>(network.lecturer_of(j))];
  }
  if (value != flow.value || project_tally != flow.project_load ||
      lecturer_tally != flow.lecturer_load) {
    throw ContractError("flow does not conserve: stored loads disagree with "
                        "the assignment");
  }
  for (int j = 0; j < inst.project_count(); ++j) {
    if (flow.project_load[static_cast<std::size_t>(j)] > network.project_cap(j)) {
      throw ContractError("flow exceeds capacity of project " +
                          std::to_string(j + 1));
    }
  }
  for (int k = 0; k < inst.lecturer_count(); ++k) {
    if (flow.lecturer_load[static_cast<std::size_t>(k)] > network.lecturer_cap(k)) {
      throw ContractError("flow exceeds quota of lecturer " +
                          std::to_string(k + 1));
    }
  }
}

}  // namespace

Matching matching_from_flow(const FlowNetwork& network, const Flow& flow) {
  check_flow(network, flow);
  Matching matching;
  matching.project_of = flow.project_of;
  return matching;
}

Flow flow_from_matching(const FlowNetwork& network, const Matching& matching) {
  const auto& inst = network.instance();
  if (static_cast<int>(matching.project_of.size()) != inst.student_count()) {
    throw ContractError("matching does not match the network shape");
  }
  Flow flow = empty_flow(network);
  for (int i = 0; i < inst.student_count(); ++i) {
    const int j = matching.project_of[static_cast<std::size_t>(i)];
    if (j < 0) continue;
    if (j >= inst.project_count() || !inst.is_acceptable(i, j)) {
      throw ContractError("matching uses a non-edge for student " +
                          std::to_string(i + 1));
    }
    flow.project_of[static_cast<std::size_t>(i)] = j;
    ++flow.project_load[static_cast<std::size_t>(j)];
    ++flow.lecturer_load[static_cast<std::size_t>(network.lecturer_of(j))];
    ++flow.value;
  }
  check_flow(network, flow);
  return flow;
}

bool exposed_project(const FlowNetwork& network, const Flow& flow, int project) {
  const int k = network.lecturer_of(project);
  return flow.project_load[static_cast<std::size_t>(project)] <
             network.project_cap(project) &&
         flow.lecturer_load[static_cast<std::size_t>(k)] <
             network.lecturer_cap(k);
}

std::string to_string(const AugPath& path) {
  std::ostringstream out;
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    if (i > 0) out << ' ';
    switch (path.nodes[i].kind) {
      case AugPath::NodeKind::source: out << "vs"; break;
      case AugPath::NodeKind::sink: out << "vt"; break;
      case AugPath::NodeKind::student: out << 's' << path.nodes[i].id + 1; break;
      case AugPath::NodeKind::project: out << 'p' << path.nodes[i].id + 1; break;
      case AugPath::NodeKind::lecturer: out << 'l' << path.nodes[i].id + 1; break;
    }
  }
  out << " : " << to_string(path.profile);
  return out.str();
}

void augment(const FlowNetwork& network, Flow& flow, const AugPath& path) {
  using Kind = AugPath::NodeKind;
  const auto& inst = network.instance();
  auto bad = [&](const std::string& why) -> ContractError {
    return ContractError("invalid augmenting path (" + why + "): " +
                         to_string(path));
  };

  // Shape: source, student, project, then per hop either "student, project"
  // (student switch) or "lecturer, project, student, project" (lecturer
  // switch), ending with "lecturer, sink". At least 5 nodes.
  const auto& nodes = path.nodes;
  if (nodes.size() < 5 || nodes.front().kind != Kind::source ||
      nodes.back().kind != Kind::sink ||
      nodes[nodes.size() - 2].kind != Kind::lecturer) {
    throw bad("malformed node sequence");
  }
  if (nodes[1].kind != Kind::student || !exposed_student(flow, nodes[1].id)) {
    throw bad("path must start at an exposed student");
  }
  // Simple path: no student, project or lecturer may repeat.
  {
    std::vector<bool> seen_s(inst.student_count(), false);
    std::vector<bool> seen_p(inst.project_count(), false);
    std::vector<bool> seen_l(inst.lecturer_count(), false);
    for (const auto& node : nodes) {
      std::vector<bool>* seen = nullptr;
      if (node.kind == Kind::student) seen = &seen_s;
      if (node.kind == Kind::project) seen = &seen_p;
      if (node.kind == Kind::lecturer) seen = &seen_l;
      if (seen == nullptr) continue;
      if (node.id < 0 || node.id >= static_cast<int>(seen->size())) {
        throw bad("node id out of range");
      }
      if ((*seen)[static_cast<std::size_t>(node.id)]) {
        throw bad("node visited twice");
      }
      (*seen)[static_cast<std::size_t>(node.id)] = true;
    }
  }

  // First pass: validate each hop against the pre-augment flow. Every
  // project and lecturer occurs at most once on a valid path, so the checks
  // do not interfere.
  struct Reassign {
    int student;
    int project;
  };
  std::vector<Reassign> reassignments;
  int student = nodes[1].id;
  std::size_t i = 2;
  while (true) {
    if (i + 1 >= nodes.size() || nodes[i].kind != Kind::project) {
      throw bad("expected a project after a student");
    }
    const int project = nodes[i].id;
    if (!inst.is_acceptable(student, project) ||
        flow.project_of[static_cast<std::size_t>(student)] == project) {
      throw bad("forward student-project edge is not residual");
    }
    reassignments.push_back({student, project});

    const auto& next = nodes[i + 1];
    if (next.kind == Kind::lecturer) {
      const int lecturer = next.id;
      if (i + 2 == nodes.size() - 1) {
        // Terminal: (p_q, l(p_q)), (l(p_q), v_t) both need residual capacity.
        if (lecturer != network.lecturer_of(project)) {
          throw bad("terminal lecturer does not own the terminal project");
        }
        if (!exposed_project(network, flow, project)) {
          throw bad("terminal project is not exposed");
        }
        break;
      }
      // Lecturer switch: forward (project, l) then backward (l, next project).
      if (lecturer != network.lecturer_of(project)) {
        throw bad("lecturer switch through a foreign lecturer");
      }
      if (flow.project_load[static_cast<std::size_t>(project)] >=
          network.project_cap(project)) {
        throw bad("forward project-lecturer edge is saturated");
      }
      if (i + 2 >= nodes.size() || nodes[i + 2].kind != Kind::project) {
        throw bad("expected a project after a lecturer");
      }
      const int donor = nodes[i + 2].id;
      if (network.lecturer_of(donor) != lecturer ||
          flow.project_load[static_cast<std::size_t>(donor)] <= 0) {
        throw bad("backward lecturer-project edge carries no flow");
      }
      // Continue backward out of `donor` via one of its matched students.
      if (i + 3 >= nodes.size() || nodes[i + 3].kind != Kind::student) {
        throw bad("expected a student after a backward project");
      }
      student = nodes[i + 3].id;
      if (flow.project_of[static_cast<std::size_t>(student)] != donor) {
        throw bad("backward project-student edge carries no flow");
      }
      i += 4;
    } else if (next.kind == Kind::student) {
      // Student switch: backward (project, s') where s' is matched to it.
      student = next.id;
      if (flow.project_of[static_cast<std::size_t>(student)] != project) {
        throw bad("backward project-student edge carries no flow");
      }
      i += 2;
    } else {
      throw bad("unexpected node kind after a project");
    }
  }

#ifndef NDEBUG
  const Matching before = matching_from_flow(network, flow);
#endif

  // Second pass: apply the student reassignments, then rebuild the loads.
  for (const auto& r : reassignments) {
    flow.project_of[static_cast<std::size_t>(r.student)] = r.project;
  }
  std::fill(flow.project_load.begin(), flow.project_load.end(), 0);
  std::fill(flow.lecturer_load.begin(), flow.lecturer_load.end(), 0);
  flow.value = 0;
  for (int s = 0; s < inst.student_count(); ++s) {
    const int j = flow.project_of[static_cast<std::size_t>(s)];
    if (j < 0) continue;
    ++flow.project_load[static_cast<std::size_t>(j)];
    ++flow.lecturer_load[static_cast<std::size_t>(network.lecturer_of(j))];
    ++flow.value;
  }

#ifndef NDEBUG
  check_flow(network, flow);  // integrality, conservation, capacity bounds
  const Matching after = matching_from_flow(network, flow);
  const Profile gained = add(matching_stats(inst, before).profile, path.profile);
  assert(matching_stats(inst, after).profile == gained &&
         "profile identity rho(M') = rho(M) + rho(P) violated");
#endif
}

}  // namespace spa
