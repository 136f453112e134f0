#include "spa/profile.hpp"

#include <sstream>

#include "spa/errors.hpp"

namespace spa {

namespace {

void require_same_ranks(const Profile& a, const Profile& b) {
  if (a.values.size() != b.values.size()) {
    throw ContractError("profile dimension mismatch: " +
                        std::to_string(a.values.size()) + " vs " +
                        std::to_string(b.values.size()));
  }
}

void require_rank_in_range(const Profile& a, int rank) {
  if (rank < 1 || rank > a.ranks()) {
    throw ContractError("rank " + std::to_string(rank) +
                        " out of range 1.." + std::to_string(a.ranks()));
  }
}

}  // namespace

Profile Profile::zeros(int ranks) {
  if (ranks < 1) {
    throw ContractError("profile length must be >= 1, got " +
                        std::to_string(ranks));
  }
  Profile p;
  p.values.assign(static_cast<std::size_t>(ranks), 0);
  return p;
}

Profile add(const Profile& a, const Profile& b) {
  if (a.kind == Profile::Kind::neg_inf || b.kind == Profile::Kind::neg_inf) {
    return Profile::negative_infinity();
  }
  if (a.kind == Profile::Kind::pos_inf || b.kind == Profile::Kind::pos_inf) {
    return Profile::positive_infinity();
  }
  require_same_ranks(a, b);
  Profile out = a;
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    out.values[r] += b.values[r];
  }
  return out;
}

Profile shift_up(const Profile& a, int rank) {
  if (!a.is_finite()) return a;
  require_rank_in_range(a, rank);
  Profile out = a;
  ++out.values[static_cast<std::size_t>(rank - 1)];
  return out;
}

Profile shift_down(const Profile& a, int rank) {
  if (!a.is_finite()) return a;
  require_rank_in_range(a, rank);
  Profile out = a;
  --out.values[static_cast<std::size_t>(rank - 1)];
  return out;
}

bool left_dominates(const Profile& a, const Profile& b) {
  using K = Profile::Kind;
  if (a.kind == K::neg_inf) return false;
  if (b.kind == K::neg_inf) return true;
  if (b.kind == K::pos_inf) return false;
  if (a.kind == K::pos_inf) return true;
  require_same_ranks(a, b);
  for (std::size_t r = 0; r < a.values.size(); ++r) {
    if (a.values[r] != b.values[r]) return a.values[r] > b.values[r];
  }
  return false;
}

bool right_precedes(const Profile& a, const Profile& b) {
  using K = Profile::Kind;
  if (a.kind == K::neg_inf) return b.kind != K::neg_inf;
  if (b.kind == K::neg_inf) return false;
  if (b.kind == K::pos_inf) return a.kind != K::pos_inf;
  if (a.kind == K::pos_inf) return false;
  require_same_ranks(a, b);
  for (std::size_t r = a.values.size(); r-- > 0;) {
    if (a.values[r] != b.values[r]) return a.values[r] < b.values[r];
  }
  return false;
}

bool profile_better(const Profile& a, const Profile& b, ProfileOrder order) {
  return order == ProfileOrder::left_max ? left_dominates(a, b)
                                         : right_precedes(a, b);
}

std::int64_t cost(const Profile& a) {
  if (!a.is_finite()) throw ContractError("cost of a sentinel profile");
  std::int64_t total = 0;
  for (std::size_t r = 0; r < a.values.size(); ++r) {
    total += static_cast<std::int64_t>(r + 1) * a.values[r];
  }
  return total;
}

int degree(const Profile& a) {
  if (!a.is_finite()) throw ContractError("degree of a sentinel profile");
  int worst = 0;
  for (std::size_t r = 0; r < a.values.size(); ++r) {
    if (a.values[r] < 0) {
      throw ContractError("degree of a profile with negative component");
    }
    if (a.values[r] > 0) worst = static_cast<int>(r + 1);
  }
  return worst;
}

std::string to_string(const Profile& a) {
  if (a.kind == Profile::Kind::neg_inf) return "-INF";
  if (a.kind == Profile::Kind::pos_inf) return "+INF";
  std::ostringstream out;
  out << '(';
  for (std::size_t r = 0; r < a.values.size(); ++r) {
    if (r > 0) out << ',';
    out << a.values[r];
  }
  out << ')';
  return out.str();
}

}  // namespace spa
