#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsg/bitvec.hpp"

namespace nsg {

// A numerical semigroup H: a cofinite additive submonoid of the naturals,
// i.e. the exponent set of the monomial ring k[[t^h : h in H]]. Immutable
// after construction; H = N is encoded with frobenius() == -1.
class NumericalSemigroup {
 public:
  // Canonicalizes an arbitrary generating set: reduces it to the unique
  // minimal system and computes the Frobenius number and membership table
  // exactly (shortest paths over residues mod the multiplicity).
  // Throws std::invalid_argument on empty input, non-positive entries, or
  // gcd != 1.
  static NumericalSemigroup from_generators(std::span<const std::int64_t> gens);
  static NumericalSemigroup from_generators(std::initializer_list<std::int64_t> gens);

  // Builds from an exact membership table over [0, frob+1); all x > frob are
  // members. Minimal generators are rederived from the table. Used by the
  // census tree and the endomorphism-chain step, both of which produce
  // tables that are already closed.
  static NumericalSemigroup from_membership(BitVec members, std::int64_t frob);

  bool contains(std::int64_t x) const;
  bool is_nat() const { return frobenius_ == -1; }

  std::int64_t frobenius() const { return frobenius_; }
  std::int64_t multiplicity() const { return multiplicity_; }
  std::int64_t edim() const { return static_cast<std::int64_t>(min_generators_.size()); }
  std::pair<std::int64_t, std::int64_t> embedding_data() const { return {multiplicity_, edim()}; }
  const std::vector<std::int64_t>& min_generators() const { return min_generators_; }

  // least member of each residue class mod n, ordered by residue 0..n-1;
  // n must be a positive member
  std::vector<std::int64_t> apery_set(std::int64_t n) const;

  std::vector<std::int64_t> gaps() const;
  std::int64_t genus() const;

  // gaps x with x + (H\{0}) contained in H; requires H != N
  std::vector<std::int64_t> pseudo_frobenius() const;
  std::int64_t type() const;

  // x in H <=> F-x not in H, checked pointwise; requires H != N
  bool is_symmetric() const;

  // membership table of length frob+1 (empty for N)
  const BitVec& member_table() const { return members_; }
  // membership bits for absolute positions [from, from+len)
  BitVec member_window(std::int64_t from, std::int64_t len) const;

  std::string descriptor() const;  // "3,7,11"

  bool operator==(const NumericalSemigroup& o) const { return min_generators_ == o.min_generators_; }

 private:
  NumericalSemigroup() = default;

  std::vector<std::int64_t> min_generators_;
  BitVec members_;  // [0, frobenius+1)
  std::int64_t frobenius_ = -1;
  std::int64_t multiplicity_ = 1;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline SemigroupPtr make_semigroup(std::span<const std::int64_t> gens) {
  return std::make_shared<const NumericalSemigroup>(NumericalSemigroup::from_generators(gens));
}
inline SemigroupPtr make_semigroup(std::initializer_list<std::int64_t> gens) {
  return std::make_shared<const NumericalSemigroup>(NumericalSemigroup::from_generators(gens));
}
inline SemigroupPtr share(NumericalSemigroup sg) {
  return std::make_shared<const NumericalSemigroup>(std::move(sg));
}

}  // namespace nsg
