#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsg/bitvec.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// A relative (fractional monomial) ideal over a fixed numerical semigroup:
// a subset I of the integers, bounded below, with I + H contained in I.
// Canonical form: offset = min(I); profile covers [offset, offset+c) with
// profile[0] set; c is the least index such that everything at or beyond
// offset+c is a member (so profile[c-1] is clear whenever c > 0). For any
// relative ideal c <= F+1, which bounds every window below.
class RelativeIdeal {
 public:
  // union of g + H over the given generators (the H-module they generate)
  static RelativeIdeal from_generators(SemigroupPtr base, std::span<const std::int64_t> gens);
  static RelativeIdeal from_generators(SemigroupPtr base, std::initializer_list<std::int64_t> gens);

  static RelativeIdeal unit(SemigroupPtr base);      // H as an ideal over itself
  static RelativeIdeal maximal(SemigroupPtr base);   // M = H \ {0}
  // K = { x : F - x not in H }; requires a singular base (H != N)
  static RelativeIdeal canonical(SemigroupPtr base);

  bool member(std::int64_t x) const;
  std::int64_t offset() const { return offset_; }
  std::int64_t conductor_index() const { return conductor_; }
  std::int64_t end() const { return offset_ + conductor_; }  // first always-member position
  const BitVec& profile() const { return profile_; }
  const NumericalSemigroup& base() const { return *base_; }
  const SemigroupPtr& base_ptr() const { return base_; }

  // membership bits for absolute positions [from, from+len)
  BitVec member_window(std::int64_t from, std::int64_t len) const;

  // unique minimal monomial generating set, I \ (M + I); its size is mu(I)
  std::vector<std::int64_t> minimal_generators() const;

  // members below the conductor, absolute values (finite part of the ideal)
  std::vector<std::int64_t> members_below_conductor() const;

  RelativeIdeal shifted(std::int64_t z) const;

  struct ReflexiveClosure;
  ReflexiveClosure reflexive_closure() const;

  struct IsoResult {
    bool iso;
    std::optional<std::int64_t> shift_by;  // J = I + shift_by when iso
  };
  // monomial fractional ideals are isomorphic iff equal up to shift
  IsoResult isomorphic_to(const RelativeIdeal& other) const;

  bool is_subset_of(const RelativeIdeal& other) const;

  // same member set over a different base; the set must be stable under the
  // new base (throws otherwise)
  RelativeIdeal rebased(SemigroupPtr newbase) const;

  bool operator==(const RelativeIdeal& other) const;

 private:
  friend RelativeIdeal sum(const RelativeIdeal&, const RelativeIdeal&);
  friend RelativeIdeal quotient(const RelativeIdeal&, const RelativeIdeal&);

  // canonicalizes window bits over [start, start+bits.size()); requires that
  // every position >= start + bits.size() is a member and none below start is
  static RelativeIdeal normalize(SemigroupPtr base, std::int64_t start, BitVec bits);
  void validate() const;

  SemigroupPtr base_;
  std::int64_t offset_ = 0;
  std::int64_t conductor_ = 0;
  BitVec profile_;
};

struct RelativeIdeal::ReflexiveClosure {
  RelativeIdeal closure;  // dual(dual(I))
  bool is_reflexive;      // closure == I
};

// product ideal IJ = { x + y : x in I, y in J } (monomial ideals multiply as
// set sums); bases must agree
RelativeIdeal sum(const RelativeIdeal& lhs, const RelativeIdeal& rhs);

// colon ideal I - J = { z : z + J is contained in I }; bases must agree
RelativeIdeal quotient(const RelativeIdeal& lhs, const RelativeIdeal& rhs);

// Hom(I, R) as the colon ideal H - I
RelativeIdeal dual(const RelativeIdeal& ideal);

// exponent semigroup of End(m) = m : m, always strictly larger than H;
// requires H != N
NumericalSemigroup end_semigroup(const SemigroupPtr& base);

}  // namespace nsg
