#include "nsg/bitvec.hpp"

#include <cassert>

#include "nsg/check.hpp"

namespace nsg {

using kernels::kWordBits;
using kernels::Word;
using kernels::word_count;

BitVec::BitVec(std::size_t nbits, bool value) : nbits_(nbits), words_(word_count(nbits), value ? ~Word(0) : 0) {
  if (value && nbits_ % kWordBits != 0) {
    words_.back() &= (~Word(0)) >> (kWordBits - nbits_ % kWordBits);
  }
}

bool BitVec::get(std::size_t i) const {
  assert(i < nbits_);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(std::size_t i, bool v) {
  assert(i < nbits_);
  const Word mask = Word(1) << (i % kWordBits);
  if (v)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

void BitVec::fill_from(std::size_t from) {
  if (from >= nbits_) return;
  const std::size_t w0 = from / kWordBits;
  const std::size_t b0 = from % kWordBits;
  words_[w0] |= (~Word(0)) << b0;
  for (std::size_t w = w0 + 1; w < words_.size(); ++w) words_[w] = ~Word(0);
  if (nbits_ % kWordBits != 0) words_.back() &= (~Word(0)) >> (kWordBits - nbits_ % kWordBits);
}

void BitVec::or_shifted(const BitVec& src, std::size_t shift) {
  kernels::active_kernels().or_shifted(words_.data(), nbits_, src.words_.data(), src.nbits_, shift);
}

void BitVec::and_shifted(const BitVec& src, std::size_t shift) {
  NSG_CHECK(src.nbits_ >= nbits_ + shift, "and_shifted source window too short");
  kernels::active_kernels().and_shifted(words_.data(), nbits_, src.words_.data(), src.nbits_, shift);
}

BitVec BitVec::slice(std::size_t from, std::size_t len) const {
  NSG_CHECK(from + len <= nbits_, "slice out of range");
  BitVec out(len, true);
  out.and_shifted(*this, from);
  return out;
}

std::uint64_t BitVec::count() const {
  return kernels::active_kernels().popcount(words_.data(), nbits_);
}

bool BitVec::none() const {
  for (Word w : words_)
    if (w != 0) return false;
  return true;
}

std::optional<std::size_t> BitVec::find_first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
  }
  return std::nullopt;
}

std::optional<std::size_t> BitVec::find_last_unset() const {
  if (nbits_ == 0) return std::nullopt;
  for (std::size_t w = words_.size(); w-- > 0;) {
    Word inv = ~words_[w];
    if (w == words_.size() - 1 && nbits_ % kWordBits != 0) {
      inv &= (~Word(0)) >> (kWordBits - nbits_ % kWordBits);
    }
    if (inv != 0) {
      return w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(__builtin_clzll(inv)));
    }
  }
  return std::nullopt;
}

bool BitVec::is_subset_of(const BitVec& other) const {
  NSG_CHECK(nbits_ == other.nbits_, "subset check on mismatched sizes");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

}  // namespace nsg
