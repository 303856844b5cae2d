#pragma once

// Brute-force reference implementations used by the tests. Everything here
// works from definitions on explicit integer ranges and stays independent of
// the library's window arithmetic.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Membership = std::function<bool(std::int64_t)>;

// additive closure of {0} and gens, as a table over [0, limit]
inline std::vector<bool> semigroup_closure(const std::vector<std::int64_t>& gens, std::int64_t limit) {
  std::vector<bool> member(static_cast<std::size_t>(limit + 1), false);
  member[0] = true;
  for (std::int64_t x = 1; x <= limit; ++x) {
    for (std::int64_t g : gens) {
      if (g <= x && member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return member;
}

// gaps read off a closure table; the caller picks limit far past stabilization
inline std::set<std::int64_t> gaps_from_closure(const std::vector<bool>& member) {
  std::set<std::int64_t> out;
  for (std::size_t x = 1; x < member.size(); ++x) {
    if (!member[x]) out.insert(static_cast<std::int64_t>(x));
  }
  return out;
}

// z in (I : J), testing every j of J in [j_lo, j_hi]
inline bool quotient_member(const Membership& in_i, const Membership& in_j, std::int64_t z,
                            std::int64_t j_lo, std::int64_t j_hi) {
  for (std::int64_t j = j_lo; j <= j_hi; ++j) {
    if (in_j(j) && !in_i(z + j)) return false;
  }
  return true;
}

// x in I + J, scanning decompositions with the I part in [i_lo, i_hi]
inline bool sum_member(const Membership& in_i, const Membership& in_j, std::int64_t x,
                       std::int64_t i_lo, std::int64_t i_hi) {
  for (std::int64_t a = i_lo; a <= i_hi; ++a) {
    if (in_i(a) && in_j(x - a)) return true;
  }
  return false;
}

// Every numerical semigroup of genus g has gaps inside [1, 2g-1], so for
// g_max <= 8 the full search space is the 2^15 subsets of [1, 15]. Returns
// gap sets grouped by genus (index = genus).
inline std::vector<std::set<std::set<std::int64_t>>> enumerate_gap_sets(std::int64_t g_max) {
  const std::int64_t top = 2 * g_max - 1;
  std::vector<std::set<std::set<std::int64_t>>> by_genus(static_cast<std::size_t>(g_max + 1));
  by_genus[0].insert(std::set<std::int64_t>{});
  for (std::uint32_t mask = 1; mask < (1u << top); ++mask) {
    const std::int64_t genus = __builtin_popcount(mask);
    if (genus > g_max) continue;
    const auto is_member = [&](std::int64_t x) {
      if (x < 0) return false;
      if (x == 0 || x > top) return true;
      return ((mask >> (x - 1)) & 1u) == 0;
    };
    bool closed = true;
    for (std::int64_t x = 1; x <= top && closed; ++x) {
      if (!is_member(x)) continue;
      for (std::int64_t y = x; x + y <= top; ++y) {
        if (is_member(y) && !is_member(x + y)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::set<std::int64_t> gapset;
    for (std::int64_t x = 1; x <= top; ++x) {
      if (!is_member(x)) gapset.insert(x);
    }
    by_genus[static_cast<std::size_t>(genus)].insert(gapset);
  }
  return by_genus;
}

}  // namespace oracle
