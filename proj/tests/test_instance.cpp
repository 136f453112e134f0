#include <doctest.h>

#include "spa/errors.hpp"
#include "spa/instance.hpp"
#include "spa/instance_io.hpp"
#include "spa/rng.hpp"
#include "test_util.hpp"

using namespace spa;
using test::figure1;
using test::profile_of;

TEST_CASE("figure 1 parses to the expected shape") {
  const SpaInstance inst = figure1();
  CHECK(inst.student_count() == 3);
  CHECK(inst.project_count() == 3);
  CHECK(inst.lecturer_count() == 2);
  CHECK(inst.max_rank() == 3);
  CHECK(inst.total_pref_length() == 6);
  CHECK(validate(inst).ok());
}

TEST_CASE("rank follows tie groups") {
  const SpaInstance inst = figure1();
  CHECK(inst.rank_of(0, 2) == 3);  // s1's third choice is p3
  CHECK(inst.rank_of(0, 0) == 1);
  CHECK(inst.rank_of(2, 1) == 1);
  CHECK_THROWS_AS(inst.rank_of(1, 2), ContractError);  // s2 only lists p1

  // "(p1 p2) p3": both tied projects rank 1, the next ranks 3.
  const SpaInstance tied = parse_instance("1 3 1\n(1 2) 3\n1 1\n1 1\n1 1\n3 0\n");
  CHECK(tied.rank_of(0, 0) == 1);
  CHECK(tied.rank_of(0, 1) == 1);
  CHECK(tied.rank_of(0, 2) == 3);
}

TEST_CASE("group ranks advance by group size") {
  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    const SpaInstance inst = test::random_tiny_instance(rng);
    for (const auto& s : inst.students()) {
      int expected = 1;
      for (const auto& group : s.pref_groups) {
        for (int p : group) CHECK(inst.rank_of(s.id, p) == expected);
        expected += static_cast<int>(group.size());
      }
    }
  }
}

TEST_CASE("validate reports violations with locations") {
  SUBCASE("figure 1 is clean") { CHECK(validate(figure1()).violations.empty()); }

  SUBCASE("zero upper quota") {
    const SpaInstance inst = parse_instance("1 1 1\n1\n1 1\n0 0\n");
    const auto report = validate(inst);
    CHECK_FALSE(report.ok());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].where == "lecturer 1");
  }

  SUBCASE("upper quota below lower quota") {
    const SpaInstance inst = parse_instance("1 1 1\n1\n1 1\n1 2\n");
    CHECK_FALSE(validate(inst).ok());
  }

  SUBCASE("duplicate project in one list") {
    const SpaInstance inst = parse_instance("1 2 1\n1 1\n1 1\n1 1\n2 0\n");
    const auto report = validate(inst);
    CHECK_FALSE(report.ok());
    CHECK(report.violations[0].message.find("twice") != std::string::npos);
  }

  SUBCASE("zero-capacity project is a warning only") {
    const SpaInstance inst = parse_instance("1 1 1\n1\n0 1\n1 0\n");
    const auto report = validate(inst);
    CHECK(report.ok());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].severity == Violation::Severity::warning);
  }

  SUBCASE("unknown project id") {
    const SpaInstance inst = parse_instance("1 1 1\n2\n1 1\n1 0\n");
    CHECK_FALSE(validate(inst).ok());
  }
}

TEST_CASE("parser edge cases") {
  SUBCASE("empty preference line is an empty list") {
    const SpaInstance inst = parse_instance("2 1 1\n\n1\n1 1\n2 0\n");
    CHECK(inst.students()[0].pref_groups.empty());
    CHECK(inst.students()[1].pref_groups.size() == 1);
    CHECK(validate(inst).ok());
  }

  SUBCASE("non-integer token names the line") {
    try {
      parse_instance("1 1 1\nfoo\n1 1\n1 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }

  SUBCASE("comments are skipped anywhere") {
    const SpaInstance inst =
        parse_instance("# header\n1 1 1 # counts\n# prefs next\n1\n1 1\n1 0\n");
    CHECK(inst.student_count() == 1);
  }

  SUBCASE("truncated file") {
    CHECK_THROWS_AS(parse_instance("2 1 1\n1\n"), ParseError);
  }

  SUBCASE("unbalanced parentheses") {
    CHECK_THROWS_AS(parse_instance("1 2 1\n(1 2\n1 1\n1 1\n2 0\n"), ParseError);
  }
}

TEST_CASE("write/parse round-trip is the identity") {
  Rng rng(123);
  for (int i = 0; i < 200; ++i) {
    const SpaInstance inst = test::random_tiny_instance(rng, 6, 4, true);
    CHECK(parse_instance(write_instance(inst)) == inst);
  }
  GenConfig config = GenConfig::defaults_for(40);
  config.tie_density = 0.4;
  config.seed = 9;
  const SpaInstance generated = generate(config);
  CHECK(parse_instance(write_instance(generated)) == generated);
}

TEST_CASE("matching stats of the figure 1 matchings") {
  const SpaInstance inst = figure1();

  Matching m1;
  m1.project_of = {2, 0, 1};  // s1->p3, s2->p1, s3->p2
  const MatchStats s1 = matching_stats(inst, m1);
  CHECK(s1.size == 3);
  CHECK(s1.profile == profile_of({2, 0, 1}));
  CHECK(s1.cost == 5);
  CHECK(s1.degree == 3);

  Matching m2;
  m2.project_of = {1, 0, 2};  // s1->p2, s2->p1, s3->p3
  const MatchStats s2 = matching_stats(inst, m2);
  CHECK(s2.size == 3);
  CHECK(s2.profile == profile_of({1, 2, 0}));
  CHECK(s2.cost == 5);
  CHECK(s2.degree == 2);

  Matching empty;
  empty.project_of = {-1, -1, -1};
  const MatchStats s0 = matching_stats(inst, empty);
  CHECK(s0.size == 0);
  CHECK(s0.profile == Profile::zeros(3));
  CHECK(s0.cost == 0);
  CHECK(s0.degree == 0);
}

TEST_CASE("matching_stats rejects invalid matchings") {
  const SpaInstance inst = figure1();

  Matching unacceptable;
  unacceptable.project_of = {-1, 1, -1};  // s2 never listed p2
  CHECK_THROWS_AS(matching_stats(inst, unacceptable), ValidationError);

  Matching over_capacity;
  over_capacity.project_of = {0, 0, -1};  // p1 has capacity 1
  CHECK_THROWS_AS(matching_stats(inst, over_capacity), ValidationError);
  const auto problems = check_matching(inst, over_capacity);
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].find("over capacity") != std::string::npos);
}

TEST_CASE("matching format round-trip with footer") {
  const SpaInstance inst = figure1();
  Matching m1;
  m1.project_of = {2, 0, 1};
  const std::string text = write_matching(inst, m1);
  CHECK(text ==
        "1 3\n"
        "2 1\n"
        "3 2\n"
        "# size=3 profile=(2,0,1) cost=5 degree=3\n");
  CHECK(parse_matching(text, inst) == m1);
  CHECK_THROWS_AS(parse_matching("1 9\n", inst), ParseError);
  CHECK_THROWS_AS(parse_matching("1 1\n1 2\n", inst), ParseError);
}

TEST_CASE("lecturer loads tie out with size") {
  Rng rng(321);
  for (int i = 0; i < 100; ++i) {
    const SpaInstance inst = test::random_tiny_instance(rng);
    // Fill greedily at random; stats must balance across views.
    Matching m;
    m.project_of.assign(static_cast<std::size_t>(inst.student_count()), -1);
    std::vector<int> project_load(static_cast<std::size_t>(inst.project_count()), 0);
    std::vector<int> lecturer_load(static_cast<std::size_t>(inst.lecturer_count()), 0);
    for (int s = 0; s < inst.student_count(); ++s) {
      for (const auto& e : inst.preference_edges(s)) {
        const auto& project = inst.projects()[static_cast<std::size_t>(e.project)];
        if (project_load[static_cast<std::size_t>(e.project)] >= project.capacity) continue;
        const auto& lecturer = inst.lecturers()[static_cast<std::size_t>(project.lecturer)];
        if (lecturer_load[static_cast<std::size_t>(project.lecturer)] >= lecturer.upper_quota) continue;
        m.project_of[static_cast<std::size_t>(s)] = e.project;
        ++project_load[static_cast<std::size_t>(e.project)];
        ++lecturer_load[static_cast<std::size_t>(project.lecturer)];
        break;
      }
    }
    const MatchStats stats = matching_stats(inst, m);
    int by_projects = 0, by_lecturers = 0;
    for (int x : project_load) by_projects += x;
    for (int x : lecturer_load) by_lecturers += x;
    CHECK(stats.size == m.size());
    CHECK(stats.size == by_projects);
    CHECK(stats.size == by_lecturers);
    int component_sum = 0;
    for (int x : stats.profile.values) component_sum += x;
    CHECK(component_sum == stats.size);
  }
}
