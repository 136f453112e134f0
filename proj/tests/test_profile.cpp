#include <doctest.h>

#include "spa/errors.hpp"
#include "spa/profile.hpp"
#include "spa/rng.hpp"
#include "test_util.hpp"

using namespace spa;
using test::profile_of;

TEST_CASE("zeros builds the empty profile") {
  CHECK(Profile::zeros(3) == profile_of({0, 0, 0}));
  CHECK(Profile::zeros(1) == profile_of({0}));
  const Profile ten = Profile::zeros(10);
  CHECK(ten.ranks() == 10);
  CHECK(cost(ten) == 0);
  CHECK(degree(ten) == 0);
  CHECK_THROWS_AS(Profile::zeros(0), ContractError);
}

TEST_CASE("add is componentwise with absorbing sentinels") {
  CHECK(add(profile_of({1, 0, 0}), profile_of({0, 1, 0})) ==
        profile_of({1, 1, 0}));
  const Profile a = profile_of({2, -1, 3});
  CHECK(add(a, Profile::zeros(3)) == a);
  CHECK(add(Profile::negative_infinity(), profile_of({5, 0, 0})) ==
        Profile::negative_infinity());
  CHECK(add(profile_of({5, 0, 0}), Profile::positive_infinity()) ==
        Profile::positive_infinity());
  // Mixed sentinels: negative infinity wins.
  CHECK(add(Profile::negative_infinity(), Profile::positive_infinity()) ==
        Profile::negative_infinity());
  CHECK(add(Profile::positive_infinity(), Profile::negative_infinity()) ==
        Profile::negative_infinity());
  CHECK_THROWS_AS(add(profile_of({1}), profile_of({1, 2})), ContractError);
}

TEST_CASE("shift adjusts one rank") {
  CHECK(shift_up(Profile::zeros(3), 2) == profile_of({0, 1, 0}));
  CHECK(shift_down(profile_of({1, 0, 0}), 1) == profile_of({0, 0, 0}));
  CHECK(shift_up(shift_down(profile_of({1, 0, 0}), 1), 3) ==
        profile_of({0, 0, 1}));
  CHECK_THROWS_AS(shift_up(Profile::zeros(3), 0), ContractError);
  CHECK_THROWS_AS(shift_up(Profile::zeros(3), 4), ContractError);
  CHECK(shift_up(Profile::negative_infinity(), 7) ==
        Profile::negative_infinity());
  CHECK(shift_down(Profile::positive_infinity(), 7) ==
        Profile::positive_infinity());
}

TEST_CASE("left domination compares from rank 1") {
  CHECK(left_dominates(profile_of({2, 0, 1}), profile_of({1, 2, 0})));
  CHECK_FALSE(left_dominates(profile_of({1, 2, 0}), profile_of({2, 0, 1})));
  const Profile a = profile_of({1, 2, 3});
  CHECK_FALSE(left_dominates(a, a));
  CHECK_FALSE(left_dominates(Profile::negative_infinity(), Profile::zeros(3)));
  CHECK(left_dominates(Profile::zeros(3), Profile::negative_infinity()));
  CHECK(left_dominates(Profile::positive_infinity(), Profile::zeros(3)));
  CHECK_THROWS_AS(left_dominates(profile_of({1}), profile_of({1, 2})),
                  ContractError);
}

TEST_CASE("right precedence compares from rank R") {
  CHECK(right_precedes(profile_of({1, 2, 0}), profile_of({2, 0, 1})));
  const Profile a = profile_of({1, 2, 0});
  CHECK_FALSE(right_precedes(a, a));
  CHECK(right_precedes(profile_of({0, 1, 0}), profile_of({0, 0, 1})));
  CHECK(right_precedes(Profile::negative_infinity(), Profile::zeros(2)));
  CHECK(right_precedes(Profile::zeros(2), Profile::positive_infinity()));
  CHECK_FALSE(right_precedes(Profile::positive_infinity(), Profile::zeros(2)));
}

TEST_CASE("cost and degree") {
  CHECK(cost(profile_of({2, 0, 1})) == 5);
  CHECK(cost(profile_of({1, 2, 0})) == 5);
  CHECK(degree(profile_of({2, 0, 1})) == 3);
  CHECK(degree(profile_of({1, 2, 0})) == 2);
  CHECK_THROWS_AS(cost(Profile::negative_infinity()), ContractError);
  CHECK_THROWS_AS(degree(Profile::positive_infinity()), ContractError);
  CHECK_THROWS_AS(degree(profile_of({1, -1, 0})), ContractError);
}

TEST_CASE("rendering") {
  CHECK(to_string(profile_of({2, 0, 1})) == "(2,0,1)");
  CHECK(to_string(Profile::negative_infinity()) == "-INF");
  CHECK(to_string(Profile::positive_infinity()) == "+INF");
}

namespace {

// Includes the sentinels so the order laws cover them.
Profile arbitrary(Rng& rng, int ranks) {
  const int roll = rng.range(0, 19);
  if (roll == 0) return Profile::negative_infinity();
  if (roll == 1) return Profile::positive_infinity();
  // A narrow value range makes equal prefixes (the interesting case) common.
  return test::random_profile(rng, ranks, 2);
}

}  // namespace

TEST_CASE("order properties over random profiles") {
  Rng rng(20240001);
  int cases = 0;
  for (int i = 0; i < 10000; ++i) {
    const int ranks = rng.range(1, 5);
    const Profile a = arbitrary(rng, ranks);
    const Profile b = arbitrary(rng, ranks);
    const Profile c = arbitrary(rng, ranks);

    // Trichotomy in both orders.
    CHECK(int(left_dominates(a, b)) + int(left_dominates(b, a)) + int(a == b) == 1);
    CHECK(int(right_precedes(a, b)) + int(right_precedes(b, a)) + int(a == b) == 1);

    // Transitivity.
    if (left_dominates(a, b) && left_dominates(b, c)) CHECK(left_dominates(a, c));
    if (right_precedes(a, b) && right_precedes(b, c)) CHECK(right_precedes(a, c));

    // Sentinel extremes.
    if (a != Profile::negative_infinity()) {
      CHECK(left_dominates(a, Profile::negative_infinity()));
      CHECK(right_precedes(Profile::negative_infinity(), a));
    }
    if (a != Profile::positive_infinity()) {
      CHECK(left_dominates(Profile::positive_infinity(), a));
      CHECK(right_precedes(a, Profile::positive_infinity()));
    }
    ++cases;
  }
  CHECK(cases == 10000);
}

TEST_CASE("arithmetic properties over random profiles") {
  Rng rng(20240002);
  for (int i = 0; i < 10000; ++i) {
    const int ranks = rng.range(1, 6);
    const Profile a = test::random_profile(rng, ranks, 8);
    const Profile b = test::random_profile(rng, ranks, 8);
    const Profile c = test::random_profile(rng, ranks, 8);

    CHECK(add(a, b) == add(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(add(a, Profile::zeros(ranks)) == a);
    CHECK(cost(add(a, b)) == cost(a) + cost(b));

    const int rank = rng.range(1, ranks);
    CHECK(shift_down(shift_up(a, rank), rank) == a);
  }
}

TEST_CASE("degree is bounded by the length") {
  Rng rng(20240003);
  for (int i = 0; i < 1000; ++i) {
    const int ranks = rng.range(1, 6);
    Profile a = test::random_profile(rng, ranks, 5);
    for (auto& v : a.values) v = v < 0 ? -v : v;
    CHECK(degree(a) <= ranks);
  }
}
