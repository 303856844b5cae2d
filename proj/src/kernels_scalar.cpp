#include "nsg/kernels.hpp"

#include <algorithm>
#include <cassert>

namespace nsg::kernels {

namespace {

inline void clear_tail(Word* dst, std::size_t nbits) {
  const std::size_t tail = nbits % kWordBits;
  if (tail != 0) dst[word_count(nbits) - 1] &= (~Word(0)) >> (kWordBits - tail);
}

void or_shifted_scalar(Word* dst, std::size_t nd_bits, const Word* src,
                       std::size_t ns_bits, std::size_t shift) {
  if (nd_bits == 0 || ns_bits == 0 || shift >= nd_bits) return;
  const std::size_t nd_words = word_count(nd_bits);
  const std::size_t ns_words = word_count(ns_bits);
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  if (bs == 0) {
    const std::size_t jend = std::min(nd_words, ns_words + ws);
    for (std::size_t j = ws; j < jend; ++j) dst[j] |= src[j - ws];
  } else {
    const std::size_t jend = std::min(nd_words, ns_words + ws + 1);
    for (std::size_t j = ws; j < jend; ++j) {
      const std::size_t i = j - ws;
      const Word lo = (i < ns_words) ? src[i] : 0;
      const Word hi = (i >= 1) ? src[i - 1] : 0;
      dst[j] |= (lo << bs) | (hi >> (kWordBits - bs));
    }
  }
  clear_tail(dst, nd_bits);
}

void and_shifted_scalar(Word* dst, std::size_t nd_bits, const Word* src,
                        std::size_t ns_bits, std::size_t shift) {
  assert(ns_bits >= nd_bits + shift);
  (void)ns_bits;
  if (nd_bits == 0) return;
  const std::size_t nd_words = word_count(nd_bits);
  const std::size_t ns_words = word_count(ns_bits);
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  if (bs == 0) {
    for (std::size_t j = 0; j < nd_words; ++j) dst[j] &= src[j + ws];
  } else {
    for (std::size_t j = 0; j < nd_words; ++j) {
      const std::size_t i = j + ws;
      const Word lo = src[i] >> bs;
      const Word hi = (i + 1 < ns_words) ? (src[i + 1] << (kWordBits - bs)) : 0;
      dst[j] &= lo | hi;
    }
  }
  clear_tail(dst, nd_bits);
}

std::uint64_t popcount_scalar(const Word* src, std::size_t nbits) {
  std::uint64_t total = 0;
  const std::size_t nwords = word_count(nbits);
  for (std::size_t i = 0; i < nwords; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(src[i]));
  return total;
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet k{or_shifted_scalar, and_shifted_scalar, popcount_scalar, "scalar"};
  return k;
}

}  // namespace nsg::kernels
