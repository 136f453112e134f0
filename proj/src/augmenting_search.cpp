#include "spa/augmenting_search.hpp"

#include <string>
#include <vector>

#include "spa/errors.hpp"

namespace spa {

namespace {

// Per-project predecessor on the best partial augmenting path found so far.
// A lecturer switch stores the (lecturer, source project) pair rather than a
// shared per-lecturer pointer, so later relaxations of the same lecturer
// cannot desynchronise earlier labels from their paths.
struct Pred {
  enum class Kind : std::uint8_t { none, student, lecturer } kind = Kind::none;
  int id = -1;              // student or lecturer id
  int source_project = -1;  // set for lecturer switches
};

struct Search {
  const FlowNetwork& network;
  const Flow& flow;
  const ProfileOrder order;
  const SearchOptions& options;

  std::vector<Profile> label;  // rho(p_j)
  std::vector<Pred> pred;

  Search(const FlowNetwork& network_, const Flow& flow_, ProfileOrder order_,
         const SearchOptions& options_)
      : network(network_), flow(flow_), order(order_), options(options_) {}

  Profile unreached() const {
    return order == ProfileOrder::left_max ? Profile::negative_infinity()
                                           : Profile::positive_infinity();
  }

  bool better(const Profile& a, const Profile& b) const {
    return profile_better(a, b, order);
  }

  void trace(const char* phase, int project, const Profile& value,
             const std::string& via) const {
    if (!options.trace) return;
    options.trace(std::string(phase) + " p" + std::to_string(project + 1) +
                  " <- " + to_string(value) + " via " + via);
  }

  // Installs `scratch` as the label of `project` when it improves on the
  // current one. Swap keeps the loops allocation-free.
  bool improve(Profile& scratch, int project, Pred via, const char* phase) {
    Profile& current = label[static_cast<std::size_t>(project)];
    if (!better(scratch, current)) return false;
    current.kind = Profile::Kind::finite;
    std::swap(current.values, scratch.values);
    pred[static_cast<std::size_t>(project)] = via;
    trace(phase, project, current,
          via.kind == Pred::Kind::student
              ? "s" + std::to_string(via.id + 1)
              : "l" + std::to_string(via.id + 1) + " from p" +
                    std::to_string(via.source_project + 1));
    return true;
  }

  // Initialisation: best 2-edge path source -> exposed student -> project.
  void init() {
    const auto& inst = network.instance();
    label.assign(static_cast<std::size_t>(inst.project_count()), unreached());
    pred.assign(static_cast<std::size_t>(inst.project_count()), Pred{});
    Profile scratch = Profile::zeros(inst.max_rank());
    for (int s = 0; s < inst.student_count(); ++s) {
      if (!exposed_student(flow, s)) continue;
      for (const auto& e : inst.preference_edges(s)) {
        scratch.kind = Profile::Kind::finite;
        scratch.values.assign(static_cast<std::size_t>(inst.max_rank()), 0);
        ++scratch.values[static_cast<std::size_t>(e.rank - 1)];
        improve(scratch, e.project, {Pred::Kind::student, s, -1}, "init");
      }
    }
  }

  // One relaxation pass; returns whether any label improved.
  bool relax_once() {
    const auto& inst = network.instance();
    bool changed = false;
    Profile scratch;

    // Student switches: move a matched student from her current project to
    // another acceptable one, extending that project's path.
    for (int s = 0; s < inst.student_count(); ++s) {
      const int matched = flow.project_of[static_cast<std::size_t>(s)];
      if (matched < 0) continue;
      const int matched_rank = inst.rank_of(s, matched);
      for (const auto& e : inst.preference_edges(s)) {
        if (e.project == matched) continue;
        // Re-read: improve() may have replaced the buffer behind the label.
        const Profile& from = label[static_cast<std::size_t>(matched)];
        if (!from.is_finite()) break;  // sentinel absorbs, never an improvement
        scratch.kind = Profile::Kind::finite;
        scratch.values = from.values;
        --scratch.values[static_cast<std::size_t>(matched_rank - 1)];
        ++scratch.values[static_cast<std::size_t>(e.rank - 1)];
        changed |= improve(scratch, e.project, {Pred::Kind::student, s, -1},
                           "relax-student");
      }
    }

    // Lecturer switches: free a unit of flow on one of the lecturer's
    // projects by rerouting it through an undersubscribed sibling. This must
    // run for non-full lecturers too: a best path may cross one mid-way,
    // e.g. when restoring a lower quota that an earlier swap would break.
    for (int k = 0; k < inst.lecturer_count(); ++k) {
      const Profile* best = nullptr;
      int source = -1;
      for (int p : inst.lecturer_projects(k)) {
        if (flow.project_load[static_cast<std::size_t>(p)] >=
            network.project_cap(p)) {
          continue;  // no residual capacity towards the lecturer
        }
        const auto& via = pred[static_cast<std::size_t>(p)];
        if (via.kind == Pred::Kind::lecturer && via.id == k) {
          continue;  // its own path already enters through this lecturer
        }
        const Profile& candidate = label[static_cast<std::size_t>(p)];
        if (!candidate.is_finite()) continue;
        if (best == nullptr || better(candidate, *best)) {
          best = &candidate;
          source = p;
        }
      }
      if (source < 0) continue;
      const Profile sigma = *best;  // freeze: updates below must not feed back
      for (int p : inst.lecturer_projects(k)) {
        if (p == source) continue;
        if (flow.project_load[static_cast<std::size_t>(p)] <= 0) continue;
        scratch = sigma;
        changed |= improve(scratch, p, {Pred::Kind::lecturer, k, source},
                           "relax-lecturer");
      }
    }
    return changed;
  }

  std::optional<AugPath> reconstruct() const {
    const auto& inst = network.instance();
    std::vector<bool> disqualified(static_cast<std::size_t>(inst.project_count()),
                                   false);

    // A candidate terminal whose pred chain already crosses its own lecturer
    // cannot take the closing edges; it is skipped and the next-best label
    // tried. No optimum is lost: such a chain enters the lecturer from a
    // sibling project that is itself exposed and labelled at least as well.
    while (true) {
      int terminal = -1;
      for (int p = 0; p < inst.project_count(); ++p) {
        if (disqualified[static_cast<std::size_t>(p)]) continue;
        if (!exposed_project(network, flow, p)) continue;
        if (!label[static_cast<std::size_t>(p)].is_finite()) continue;
        if (terminal < 0 || better(label[static_cast<std::size_t>(p)],
                                   label[static_cast<std::size_t>(terminal)])) {
          terminal = p;
        }
      }
      if (terminal < 0) return std::nullopt;

      // Walk pred values and matched edges back to an exposed student. The
      // walk revisiting a project or lecturer would mean a cycle, which
      // cannot happen for flows satisfying the solver's loop invariant.
      using Kind = AugPath::NodeKind;
      std::vector<AugPath::Node> reversed;  // terminal ... first student
      std::vector<bool> seen_project(static_cast<std::size_t>(inst.project_count()), false);
      std::vector<bool> seen_lecturer(static_cast<std::size_t>(inst.lecturer_count()), false);
      int project = terminal;
      while (true) {
        if (seen_project[static_cast<std::size_t>(project)]) {
          throw InternalError("cycle during augmenting path reconstruction at p" +
                              std::to_string(project + 1));
        }
        seen_project[static_cast<std::size_t>(project)] = true;
        reversed.push_back({Kind::project, project});

        const Pred& via = pred[static_cast<std::size_t>(project)];
        if (via.kind == Pred::Kind::student) {
          reversed.push_back({Kind::student, via.id});
          const int matched = flow.project_of[static_cast<std::size_t>(via.id)];
          if (matched < 0) break;  // reached an exposed student
          project = matched;
        } else if (via.kind == Pred::Kind::lecturer) {
          if (seen_lecturer[static_cast<std::size_t>(via.id)]) {
            throw InternalError("cycle during augmenting path reconstruction at l" +
                                std::to_string(via.id + 1));
          }
          seen_lecturer[static_cast<std::size_t>(via.id)] = true;
          reversed.push_back({Kind::lecturer, via.id});
          project = via.source_project;
        } else {
          throw InternalError("reachable project without a predecessor: p" +
                              std::to_string(project + 1));
        }
      }

      const int closing_lecturer = network.lecturer_of(terminal);
      if (seen_lecturer[static_cast<std::size_t>(closing_lecturer)]) {
        disqualified[static_cast<std::size_t>(terminal)] = true;
        continue;
      }
      if (options.trace) {
        options.trace("final p" + std::to_string(terminal + 1) + " profile " +
                      to_string(label[static_cast<std::size_t>(terminal)]));
      }

      AugPath path;
      path.profile = label[static_cast<std::size_t>(terminal)];
      path.nodes.push_back({Kind::source, 0});
      path.nodes.insert(path.nodes.end(), reversed.rbegin(), reversed.rend());
      path.nodes.push_back({Kind::lecturer, closing_lecturer});
      path.nodes.push_back({Kind::sink, 0});
      return path;
    }
  }

  std::optional<AugPath> run() {
    init();
    // Relax until a full pass changes nothing. A pass propagates labels by
    // at least one hop along any best path, and simple paths have at most
    // n1 student hops plus n2 lecturer hops, so convergence within the cap
    // is guaranteed; |f| passes alone are not enough when a best path
    // interleaves lecturer switches between student switches.
    const auto& inst = network.instance();
    const int cap = inst.student_count() + inst.project_count() + 2;
    int iteration = 0;
    while (relax_once()) {
      if (++iteration > cap) {
        throw InternalError("profile relaxation did not converge");
      }
    }
    if (options.capture_labels != nullptr) *options.capture_labels = label;
    return reconstruct();
  }
};

}  // namespace

std::optional<AugPath> find_optimal_aug_path(const FlowNetwork& network,
                                             const Flow& flow,
                                             ProfileOrder order,
                                             const SearchOptions& options) {
  Search search(network, flow, order, options);
  return search.run();
}

std::optional<AugPath> find_max_profile_aug_path(const FlowNetwork& network,
                                                 const Flow& flow,
                                                 const SearchOptions& options) {
  return find_optimal_aug_path(network, flow, ProfileOrder::left_max, options);
}

std::optional<AugPath> find_min_profile_aug_path(const FlowNetwork& network,
                                                 const Flow& flow,
                                                 const SearchOptions& options) {
  return find_optimal_aug_path(network, flow, ProfileOrder::right_min, options);
}

}  // namespace spa
