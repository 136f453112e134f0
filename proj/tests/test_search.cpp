#include <doctest.h>

#include <algorithm>
#include <vector>

#include "spa/augmenting_search.hpp"
#include "spa/oracle.hpp"
#include "spa/rng.hpp"
#include "spa/solver.hpp"
#include "test_util.hpp"

using namespace spa;
using test::figure1;
using test::profile_of;

namespace {

std::vector<std::string> path_names(const AugPath& path) {
  std::vector<std::string> names;
  for (const auto& node : path.nodes) {
    using K = AugPath::NodeKind;
    switch (node.kind) {
      case K::source: names.push_back("vs"); break;
      case K::sink: names.push_back("vt"); break;
      case K::student: names.push_back("s" + std::to_string(node.id + 1)); break;
      case K::project: names.push_back("p" + std::to_string(node.id + 1)); break;
      case K::lecturer: names.push_back("l" + std::to_string(node.id + 1)); break;
    }
  }
  return names;
}

}  // namespace

TEST_CASE("maximum-profile search traces figure 1") {
  const SpaInstance inst = figure1();
  const FlowNetwork network(inst);

  SUBCASE("empty flow: first choice via the lowest-id student and project") {
    const Flow flow = empty_flow(network);
    const auto path = find_max_profile_aug_path(network, flow);
    REQUIRE(path);
    CHECK(path_names(*path) ==
          std::vector<std::string>{"vs", "s1", "p1", "l1", "vt"});
    CHECK(path->profile == profile_of({1, 0, 0}));
  }

  SUBCASE("two matched: the path rewires s1 to its third choice") {
    Matching start;
    start.project_of = {0, -1, 1};
    const Flow flow = flow_from_matching(network, start);
    const auto path = find_max_profile_aug_path(network, flow);
    REQUIRE(path);
    CHECK(path_names(*path) ==
          std::vector<std::string>{"vs", "s2", "p1", "s1", "p3", "l2", "vt"});
    CHECK(path->profile == profile_of({0, 0, 1}));
  }

  SUBCASE("maximum flow: no augmenting path") {
    Matching m1;
    m1.project_of = {2, 0, 1};
    const Flow flow = flow_from_matching(network, m1);
    CHECK_FALSE(find_max_profile_aug_path(network, flow));
  }
}

TEST_CASE("minimum-profile search traces figure 1") {
  const SpaInstance inst = figure1();
  const FlowNetwork network(inst);

  SUBCASE("empty flow: assigns a first choice") {
    const Flow flow = empty_flow(network);
    const auto path = find_min_profile_aug_path(network, flow);
    REQUIRE(path);
    CHECK(path->profile == profile_of({1, 0, 0}));
  }

  SUBCASE("run to completion reaches the generous optimum") {
    Flow flow = empty_flow(network);
    while (auto path = find_min_profile_aug_path(network, flow)) {
      augment(network, flow, *path);
    }
    const Matching result = matching_from_flow(network, flow);
    CHECK(result.project_of == std::vector<int>{1, 0, 2});
    CHECK(matching_stats(inst, result).profile == profile_of({1, 2, 0}));
  }

  SUBCASE("maximum flow: none") {
    Matching m2;
    m2.project_of = {1, 0, 2};
    const Flow flow = flow_from_matching(network, m2);
    CHECK_FALSE(find_min_profile_aug_path(network, flow));
  }
}

TEST_CASE("trace emitter reports label updates") {
  const SpaInstance inst = figure1();
  const FlowNetwork network(inst);
  const Flow flow = empty_flow(network);
  std::vector<std::string> lines;
  SearchOptions options;
  options.trace = [&](const std::string& line) { lines.push_back(line); };
  find_max_profile_aug_path(network, flow, options);
  // p2's label is first set through s1 then improved through s3.
  REQUIRE(!lines.empty());
  bool improved = false;
  for (const auto& line : lines) {
    if (line == "init p2 <- (1,0,0) via s3") improved = true;
  }
  CHECK(improved);
  CHECK(lines.back().find("final p1") == 0);
}

TEST_CASE("relaxation reaches paths with a mid-path lecturer switch") {
  // With flow {(s2,p1)} the only augmenting path is
  // vs, s1, p2, l1, p1, s2, p3, l2, vt: the lecturer switch sits between two
  // student hops, so one relaxation pass per unit of flow is not enough and
  // the loops must run to a fixpoint.
  const SpaInstance inst = parse_instance(
      "2 3 2\n"
      "2\n"
      "(3 1)\n"
      "1 1\n"
      "1 1\n"
      "1 2\n"
      "1 0\n"
      "1 0\n");
  REQUIRE(validate(inst).ok());
  const FlowNetwork network(inst);
  Matching start;
  start.project_of = {-1, 0};
  const Flow flow = flow_from_matching(network, start);

  const auto path = find_max_profile_aug_path(network, flow);
  REQUIRE(path);
  CHECK(path_names(*path) == std::vector<std::string>{"vs", "s1", "p2", "l1",
                                                      "p1", "s2", "p3", "l2",
                                                      "vt"});
  CHECK(path->profile == profile_of({1}));

  // End to end: both orders complete this instance to size 2.
  CHECK(greedy_max(inst).stats.size == 2);
  CHECK(generous_max(inst).stats.size == 2);
}

TEST_CASE("search agrees with path enumeration along greedy runs") {
  Rng rng(8800);
  int checked_paths = 0;
  int label_checks = 0;
  for (int i = 0; i < 250; ++i) {
    const SpaInstance inst = test::random_tiny_instance(rng, 6, 4);
    const FlowNetwork network(inst);
    for (ProfileOrder order : {ProfileOrder::left_max, ProfileOrder::right_min}) {
      Flow flow = empty_flow(network);
      while (true) {
        const auto enumeration = enumerate_paths(network, flow, order);
        std::vector<Profile> labels;
        SearchOptions options;
        options.capture_labels = &labels;
        const auto path = find_optimal_aug_path(network, flow, order, options);
        if (!path) {
          // none returned <=> no augmenting path <=> the flow is maximum
          CHECK_FALSE(enumeration.best_full.has_value());
          CHECK(flow.value == max_matching_size(network));
          break;
        }
        REQUIRE(enumeration.best_full.has_value());
        CHECK(path->profile == *enumeration.best_full);
        ++checked_paths;

        // Label soundness and optimality at exit: every finite label is the
        // profile of some enumerated prefix path, and no prefix path beats
        // its project's final label.
        for (int p = 0; p < inst.project_count(); ++p) {
          const auto& prefixes =
              enumeration.partial_profiles[static_cast<std::size_t>(p)];
          const Profile& label = labels[static_cast<std::size_t>(p)];
          if (label.is_finite()) {
            CHECK(std::find(prefixes.begin(), prefixes.end(), label) !=
                  prefixes.end());
          }
          for (const auto& candidate : prefixes) {
            CHECK_FALSE(profile_better(candidate, label, order));
          }
          ++label_checks;
        }
        augment(network, flow, *path);
      }
    }
  }
  CHECK(checked_paths > 500);
  CHECK(label_checks > 0);
}
