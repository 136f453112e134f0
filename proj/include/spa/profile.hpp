#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spa {

// Rank-count vector (x_1, ..., x_R): component r counts assignments at rank r.
// Matching profiles have non-negative components; profiles of augmenting paths
// may go negative. The two sentinels bracket all finite profiles in both
// comparison orders, mark "no path known" states in the searches, and are
// absorbing under arithmetic.
struct Profile {
  enum class Kind : std::uint8_t { finite, neg_inf, pos_inf };

  Kind kind = Kind::finite;
  std::vector<std::int32_t> values;  // length R; only meaningful when finite

  static Profile zeros(int ranks);
  static Profile negative_infinity() { return Profile{Kind::neg_inf, {}}; }
  static Profile positive_infinity() { return Profile{Kind::pos_inf, {}}; }

  bool is_finite() const { return kind == Kind::finite; }
  int ranks() const { return static_cast<int>(values.size()); }

  friend bool operator==(const Profile&, const Profile&) = default;
};

// Componentwise sum. A sentinel operand absorbs; when both sentinels appear,
// negative infinity wins.
Profile add(const Profile& a, const Profile& b);

// Copy of `a` with one more (shift_up) or one fewer (shift_down) assignment at
// `rank` (1-based). Sentinels pass through unchanged.
Profile shift_up(const Profile& a, int rank);
Profile shift_down(const Profile& a, int rank);

// Strict total orders on profiles of equal length. left_dominates compares
// from rank 1 upward, larger component wins; right_precedes compares from rank
// R downward, smaller component wins. NEG_INF sits below every finite profile
// in both orders, POS_INF above.
bool left_dominates(const Profile& a, const Profile& b);
bool right_precedes(const Profile& a, const Profile& b);

enum class ProfileOrder { left_max, right_min };

// True when `a` is strictly better than `b` under the optimisation order:
// left_max prefers left-dominating profiles, right_min right-preceding ones.
bool profile_better(const Profile& a, const Profile& b, ProfileOrder order);

// Sum of r * x_r over all components.
std::int64_t cost(const Profile& a);

// Largest rank with a positive count, or 0 for the all-zero profile. Only
// defined for matching profiles (all components >= 0).
int degree(const Profile& a);

// "(x1,x2,...,xR)"; sentinels render as "-INF" / "+INF".
std::string to_string(const Profile& a);

}  // namespace spa
