#include "nsg/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "nsg/check.hpp"

namespace nsg {

namespace {

// Exact tables only: refuse inputs whose Frobenius number would need more
// bits than this (2^28 bits = 32 MiB).
constexpr std::int64_t kMaxTableBits = std::int64_t(1) << 28;

// Least member of each residue class mod m, by Dijkstra on the residue graph
// (edge r -> (r+g) mod m of weight g per generator g).
std::vector<std::int64_t> apery_by_shortest_path(std::int64_t m, const std::vector<std::int64_t>& gens) {
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), std::numeric_limits<std::int64_t>::max());
  dist[0] = 0;
  using Node = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> queue;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::int64_t g : gens) {
      if (g % m == 0) continue;  // stays in the same class, strictly worse
      const std::int64_t nr = (r + g) % m;
      const std::int64_t nd = d + g;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        queue.push({nd, nr});
      }
    }
  }
  for (std::int64_t d : dist) NSG_CHECK(d != std::numeric_limits<std::int64_t>::max(), "residue class unreachable");
  return dist;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> gens) {
  if (gens.empty()) throw std::invalid_argument("generator list is empty");
  std::vector<std::int64_t> g(gens.begin(), gens.end());
  for (std::int64_t x : g) {
    if (x <= 0) throw std::invalid_argument("generators must be positive");
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::int64_t d = 0;
  for (std::int64_t x : g) d = std::gcd(d, x);
  if (d != 1) throw std::invalid_argument("not a numerical semigroup: gcd of generators is " + std::to_string(d));

  const std::int64_t m = g.front();
  if (m == 1) {
    NumericalSemigroup sg;
    sg.min_generators_ = {1};
    sg.frobenius_ = -1;
    sg.multiplicity_ = 1;
    return sg;
  }
  if (m > (std::int64_t(1) << 22)) throw std::invalid_argument("multiplicity too large for exact tables");

  const std::vector<std::int64_t> apery = apery_by_shortest_path(m, g);
  const std::int64_t frob = *std::max_element(apery.begin(), apery.end()) - m;
  NSG_CHECK(frob >= 1, "singular semigroup must have a positive Frobenius number");
  if (frob + 1 > kMaxTableBits) throw std::invalid_argument("Frobenius number too large for exact tables");

  BitVec members(static_cast<std::size_t>(frob + 1));
  for (std::int64_t r = 0; r < m; ++r) {
    for (std::int64_t x = apery[static_cast<std::size_t>(r)]; x <= frob; x += m) {
      members.set(static_cast<std::size_t>(x));
    }
  }
  return from_membership(std::move(members), frob);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<std::int64_t> gens) {
  return from_generators(std::span<const std::int64_t>(gens.begin(), gens.size()));
}

NumericalSemigroup NumericalSemigroup::from_membership(BitVec members, std::int64_t frob) {
  if (frob == -1) {
    NSG_CHECK(members.empty(), "membership table for N must be empty");
    NumericalSemigroup sg;
    sg.min_generators_ = {1};
    sg.frobenius_ = -1;
    sg.multiplicity_ = 1;
    return sg;
  }
  NSG_CHECK(frob >= 1, "frobenius must be -1 or >= 1");
  const auto table_len = static_cast<std::size_t>(frob + 1);
  NSG_CHECK(members.size() == table_len, "membership table must cover [0, F+1)");
  NSG_CHECK(members.get(0), "0 must be a member");
  NSG_CHECK(!members.get(static_cast<std::size_t>(frob)), "the Frobenius number is not a member");

  // multiplicity: least positive member (F+1 when the table has no other one)
  std::int64_t m = frob + 1;
  for (std::int64_t x = 1; x <= frob; ++x) {
    if (members.get(static_cast<std::size_t>(x))) {
      m = x;
      break;
    }
  }

  // minimal generators: members of [1, F+m] not expressible as a sum of two
  // nonzero members (anything above F+m is m + a larger member)
  const std::int64_t window = frob + m + 1;
  BitVec ext(static_cast<std::size_t>(window));
  ext.or_shifted(members, 0);
  ext.fill_from(table_len);
  BitVec positive = ext;
  positive.set(0, false);
  BitVec sums(static_cast<std::size_t>(window));
  for (std::int64_t a = 1; a < window; ++a) {
    if (positive.get(static_cast<std::size_t>(a))) sums.or_shifted(positive, static_cast<std::size_t>(a));
  }
  std::vector<std::int64_t> gens;
  for (std::int64_t x = 1; x < window; ++x) {
    if (positive.get(static_cast<std::size_t>(x)) && !sums.get(static_cast<std::size_t>(x))) gens.push_back(x);
  }
  NSG_CHECK(!gens.empty() && gens.front() == m, "multiplicity must be the least minimal generator");
  NSG_CHECK(static_cast<std::int64_t>(gens.size()) <= m, "embedding dimension exceeds multiplicity");

  std::int64_t d = 0;
  for (std::int64_t x : gens) d = std::gcd(d, x);
  NSG_CHECK(d == 1, "membership table is not cofinite (gcd of generators != 1)");

  // closure under each generator: member x, x+g <= F  =>  x+g member
  for (std::int64_t gval : gens) {
    if (gval > frob) continue;
    const std::size_t len = static_cast<std::size_t>(frob + 1 - gval);
    BitVec lo = members.slice(0, len);
    BitVec hi = members.slice(static_cast<std::size_t>(gval), len);
    NSG_CHECK(lo.is_subset_of(hi), "membership table not closed under addition");
  }

  NumericalSemigroup sg;
  sg.min_generators_ = std::move(gens);
  sg.members_ = std::move(members);
  sg.frobenius_ = frob;
  sg.multiplicity_ = m;
  return sg;
}

bool NumericalSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (x > frobenius_) return true;
  return members_.get(static_cast<std::size_t>(x));
}

std::vector<std::int64_t> NumericalSemigroup::apery_set(std::int64_t n) const {
  if (n <= 0 || !contains(n)) throw std::invalid_argument("Apery set requires a positive member");
  std::vector<std::int64_t> result(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) {
    std::int64_t x = r;
    while (!contains(x)) x += n;
    result[static_cast<std::size_t>(r)] = x;
  }
  return result;
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x <= frobenius_; ++x) {
    if (!members_.get(static_cast<std::size_t>(x))) out.push_back(x);
  }
  return out;
}

std::int64_t NumericalSemigroup::genus() const {
  if (is_nat()) return 0;
  return frobenius_ + 1 - static_cast<std::int64_t>(members_.count());
}

std::vector<std::int64_t> NumericalSemigroup::pseudo_frobenius() const {
  if (is_nat()) throw std::invalid_argument("regular ring, no pseudo-Frobenius numbers");
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x <= frobenius_; ++x) {
    if (members_.get(static_cast<std::size_t>(x))) continue;
    bool ok = true;
    for (std::int64_t g : min_generators_) {
      if (!contains(x + g)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  NSG_CHECK(!out.empty() && out.back() == frobenius_, "max pseudo-Frobenius number must be F");
  return out;
}

std::int64_t NumericalSemigroup::type() const {
  return static_cast<std::int64_t>(pseudo_frobenius().size());
}

bool NumericalSemigroup::is_symmetric() const {
  if (is_nat()) throw std::invalid_argument("symmetry is undefined for the regular ring");
  for (std::int64_t x = 0; x <= frobenius_; ++x) {
    if (contains(x) == contains(frobenius_ - x)) return false;
  }
  return true;
}

BitVec NumericalSemigroup::member_window(std::int64_t from, std::int64_t len) const {
  NSG_CHECK(len >= 0, "negative window length");
  BitVec out(static_cast<std::size_t>(len));
  if (len == 0) return out;
  // table region [0, F+1)
  if (from < 0) {
    const std::int64_t start = -from;
    if (start < len) {
      BitVec tmp(static_cast<std::size_t>(len));
      tmp.or_shifted(members_, static_cast<std::size_t>(start));
      out = std::move(tmp);
    }
  } else if (from <= frobenius_) {
    const std::int64_t avail = frobenius_ + 1 - from;
    const std::int64_t take = std::min(len, avail);
    out.or_shifted(members_.slice(static_cast<std::size_t>(from), static_cast<std::size_t>(take)), 0);
  }
  // everything above F is a member
  const std::int64_t cond_pos = frobenius_ + 1 - from;
  if (cond_pos < len) out.fill_from(static_cast<std::size_t>(std::max<std::int64_t>(cond_pos, 0)));
  return out;
}

std::string NumericalSemigroup::descriptor() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < min_generators_.size(); ++i) {
    if (i > 0) os << ',';
    os << min_generators_[i];
  }
  return os.str();
}

}  // namespace nsg
