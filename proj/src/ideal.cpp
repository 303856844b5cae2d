#include "nsg/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsg/check.hpp"

namespace nsg {

namespace {

bool same_base(const RelativeIdeal& a, const RelativeIdeal& b) {
  return a.base_ptr() == b.base_ptr() || a.base() == b.base();
}

void require_same_base(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!same_base(a, b)) throw std::invalid_argument("ideals live over different semigroups");
}

}  // namespace

RelativeIdeal RelativeIdeal::normalize(SemigroupPtr base, std::int64_t start, BitVec bits) {
  RelativeIdeal out;
  out.base_ = std::move(base);
  const auto first = bits.find_first_set();
  if (!first.has_value()) {
    out.offset_ = start + static_cast<std::int64_t>(bits.size());
    out.conductor_ = 0;
    out.profile_ = BitVec();
  } else {
    const std::size_t f = *first;
    out.offset_ = start + static_cast<std::int64_t>(f);
    BitVec rest = bits.slice(f, bits.size() - f);
    const auto last_zero = rest.find_last_unset();
    if (!last_zero.has_value()) {
      out.conductor_ = 0;
      out.profile_ = BitVec();
    } else {
      out.conductor_ = static_cast<std::int64_t>(*last_zero) + 1;
      out.profile_ = rest.slice(0, static_cast<std::size_t>(out.conductor_));
    }
  }
  out.validate();
  return out;
}

void RelativeIdeal::validate() const {
  const std::int64_t frob = base_->frobenius();
  NSG_CHECK(conductor_ <= frob + 1, "conductor index exceeds F+1");
  NSG_CHECK(conductor_ == 0 || profile_.get(0), "profile must start with a member");
  NSG_CHECK(conductor_ == 0 || !profile_.get(static_cast<std::size_t>(conductor_ - 1)),
            "conductor index not minimal");
  // H-stability on the finite window [offset, offset + c + max generator]
  const auto& gens = base_->min_generators();
  const std::int64_t maxg = gens.back();
  const std::int64_t len = conductor_ + maxg + 1;
  const BitVec ext = member_window(offset_, len);
  for (std::int64_t g : gens) {
    const std::size_t sub = static_cast<std::size_t>(len - g);
    BitVec lo = ext.slice(0, sub);
    BitVec hi = ext.slice(static_cast<std::size_t>(g), sub);
    NSG_CHECK(lo.is_subset_of(hi), "ideal window is not H-stable");
  }
}

RelativeIdeal RelativeIdeal::from_generators(SemigroupPtr base, std::span<const std::int64_t> gens) {
  if (gens.empty()) throw std::invalid_argument("ideal generator set is empty (zero module excluded)");
  std::vector<std::int64_t> g(gens.begin(), gens.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  const std::int64_t gmin = g.front();
  const std::int64_t window = base->frobenius() + 2;
  const BitVec hext = base->member_window(0, window);
  BitVec bits(static_cast<std::size_t>(window));
  for (std::int64_t gen : g) {
    const std::int64_t s = gen - gmin;
    if (s < window) bits.or_shifted(hext, static_cast<std::size_t>(s));
  }
  return normalize(std::move(base), gmin, std::move(bits));
}

RelativeIdeal RelativeIdeal::from_generators(SemigroupPtr base, std::initializer_list<std::int64_t> gens) {
  return from_generators(std::move(base), std::span<const std::int64_t>(gens.begin(), gens.size()));
}

RelativeIdeal RelativeIdeal::unit(SemigroupPtr base) {
  BitVec bits = base->member_table();
  return normalize(std::move(base), 0, std::move(bits));
}

RelativeIdeal RelativeIdeal::maximal(SemigroupPtr base) {
  BitVec bits = base->member_table();
  if (bits.empty()) bits = BitVec(1);  // H = N: the single non-member 0
  bits.set(0, false);
  return normalize(std::move(base), 0, std::move(bits));
}

RelativeIdeal RelativeIdeal::canonical(SemigroupPtr base) {
  if (base->is_nat()) throw std::invalid_argument("canonical ideal requires a singular ring");
  const std::int64_t frob = base->frobenius();
  BitVec bits(static_cast<std::size_t>(frob + 1));
  for (std::int64_t y = 0; y <= frob; ++y) {
    if (!base->contains(frob - y)) bits.set(static_cast<std::size_t>(y));
  }
  RelativeIdeal k = normalize(std::move(base), 0, std::move(bits));
  NSG_CHECK(k.offset_ == 0 && k.conductor_ == frob + 1, "canonical ideal must satisfy H <= K <= N");
  return k;
}

bool RelativeIdeal::member(std::int64_t x) const {
  if (x < offset_) return false;
  const std::int64_t p = x - offset_;
  if (p >= conductor_) return true;
  return profile_.get(static_cast<std::size_t>(p));
}

BitVec RelativeIdeal::member_window(std::int64_t from, std::int64_t len) const {
  NSG_CHECK(len >= 0, "negative window length");
  BitVec out(static_cast<std::size_t>(len));
  if (len == 0) return out;
  if (from < offset_) {
    out.or_shifted(profile_, static_cast<std::size_t>(offset_ - from));
  } else {
    const std::int64_t p0 = from - offset_;
    if (p0 < conductor_) {
      out.or_shifted(profile_.slice(static_cast<std::size_t>(p0), static_cast<std::size_t>(conductor_ - p0)), 0);
    }
  }
  const std::int64_t cond_pos = end() - from;
  if (cond_pos < len) out.fill_from(static_cast<std::size_t>(std::max<std::int64_t>(cond_pos, 0)));
  return out;
}

std::vector<std::int64_t> RelativeIdeal::minimal_generators() const {
  const std::int64_t m = base_->multiplicity();
  const std::int64_t window = conductor_ + m;
  const BitVec ext = member_window(offset_, window);
  BitVec reducible(static_cast<std::size_t>(window));
  for (std::int64_t g : base_->min_generators()) {
    if (g < window) reducible.or_shifted(ext, static_cast<std::size_t>(g));
  }
  std::vector<std::int64_t> out;
  for (std::int64_t p = 0; p < window; ++p) {
    if (ext.get(static_cast<std::size_t>(p)) && !reducible.get(static_cast<std::size_t>(p))) {
      out.push_back(offset_ + p);
    }
  }
  NSG_CHECK(!out.empty() && out.front() == offset_, "offset must be a minimal generator");
  return out;
}

std::vector<std::int64_t> RelativeIdeal::members_below_conductor() const {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 0; p < conductor_; ++p) {
    if (profile_.get(static_cast<std::size_t>(p))) out.push_back(offset_ + p);
  }
  return out;
}

RelativeIdeal RelativeIdeal::shifted(std::int64_t z) const {
  RelativeIdeal out = *this;
  out.offset_ += z;
  return out;
}

RelativeIdeal::ReflexiveClosure RelativeIdeal::reflexive_closure() const {
  RelativeIdeal closure = dual(dual(*this));
  NSG_CHECK(is_subset_of(closure), "I must embed in its double dual");
  const bool refl = (closure == *this);
  return {std::move(closure), refl};
}

RelativeIdeal::IsoResult RelativeIdeal::isomorphic_to(const RelativeIdeal& other) const {
  require_same_base(*this, other);
  if (conductor_ == other.conductor_ && profile_ == other.profile_) {
    return {true, other.offset_ - offset_};
  }
  return {false, std::nullopt};
}

bool RelativeIdeal::is_subset_of(const RelativeIdeal& other) const {
  require_same_base(*this, other);
  const std::int64_t lo = std::min(offset_, other.offset_);
  const std::int64_t hi = std::max(end(), other.end());
  const std::int64_t len = hi - lo;
  return member_window(lo, len).is_subset_of(other.member_window(lo, len));
}

RelativeIdeal RelativeIdeal::rebased(SemigroupPtr newbase) const {
  return normalize(std::move(newbase), offset_, member_window(offset_, conductor_));
}

bool RelativeIdeal::operator==(const RelativeIdeal& other) const {
  return same_base(*this, other) && offset_ == other.offset_ && conductor_ == other.conductor_ &&
         profile_ == other.profile_;
}

RelativeIdeal sum(const RelativeIdeal& lhs, const RelativeIdeal& rhs) {
  require_same_base(lhs, rhs);
  const std::int64_t window = lhs.base().frobenius() + 2;
  const std::int64_t off = lhs.offset_ + rhs.offset_;
  const BitVec rext = rhs.member_window(rhs.offset_, window);
  BitVec bits(static_cast<std::size_t>(window));
  for (std::int64_t a : lhs.minimal_generators()) {
    const std::int64_t s = a - lhs.offset_;
    if (s < window) bits.or_shifted(rext, static_cast<std::size_t>(s));
  }
  return RelativeIdeal::normalize(lhs.base_ptr(), off, std::move(bits));
}

RelativeIdeal quotient(const RelativeIdeal& lhs, const RelativeIdeal& rhs) {
  require_same_base(lhs, rhs);
  const std::vector<std::int64_t> gens = rhs.minimal_generators();
  const std::int64_t ming = gens.front();  // == rhs.offset
  const std::int64_t maxg = gens.back();
  const std::int64_t start = lhs.offset_ - maxg;
  const std::int64_t always = lhs.end() - ming;  // everything here and beyond qualifies
  const std::int64_t window = always - start;
  if (window <= 0) return RelativeIdeal::normalize(lhs.base_ptr(), always, BitVec());
  const std::int64_t ext_len = window + (maxg - ming);
  const BitVec ext = lhs.member_window(start + ming, ext_len);
  BitVec bits(static_cast<std::size_t>(window), true);
  for (std::int64_t g : gens) {
    bits.and_shifted(ext, static_cast<std::size_t>(g - ming));
  }
  RelativeIdeal out = RelativeIdeal::normalize(lhs.base_ptr(), start, std::move(bits));
  NSG_CHECK(out.offset() >= start, "quotient offset below provable window bound");
  NSG_CHECK(out.end() <= always, "quotient conductor beyond provable window bound");
  return out;
}

RelativeIdeal dual(const RelativeIdeal& ideal) {
  return quotient(RelativeIdeal::unit(ideal.base_ptr()), ideal);
}

NumericalSemigroup end_semigroup(const SemigroupPtr& base) {
  if (base->is_nat()) throw std::invalid_argument("End(m) requires a singular ring");
  const RelativeIdeal m_ideal = RelativeIdeal::maximal(base);
  const RelativeIdeal e_ideal = quotient(m_ideal, m_ideal);
  NSG_CHECK(e_ideal.offset() == 0, "M - M must contain 0");
  const std::int64_t c = e_ideal.conductor_index();
  NumericalSemigroup result = (c == 0)
      ? NumericalSemigroup::from_membership(BitVec(), -1)
      : NumericalSemigroup::from_membership(e_ideal.member_window(0, c), c - 1);
  // E strictly contains H: every member of H qualifies and F does too
  for (std::int64_t g : base->min_generators()) NSG_CHECK(result.contains(g), "End semigroup must contain H");
  NSG_CHECK(result.contains(base->frobenius()), "End semigroup must contain the Frobenius number");
  return result;
}

}  // namespace nsg
