// AVX2 variants of the bit-table kernels. This translation unit is the only
// one compiled with -mavx2; execution is gated behind the runtime CPU check
// in kernels.cpp.

#include "nsg/kernels.hpp"

#if defined(NSG_ENABLE_AVX2) && defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>
#include <cassert>

namespace nsg::kernels {

namespace {

inline void clear_tail(Word* dst, std::size_t nbits) {
  const std::size_t tail = nbits % kWordBits;
  if (tail != 0) dst[word_count(nbits) - 1] &= (~Word(0)) >> (kWordBits - tail);
}

void or_shifted_avx2(Word* dst, std::size_t nd_bits, const Word* src,
                     std::size_t ns_bits, std::size_t shift) {
  if (nd_bits == 0 || ns_bits == 0 || shift >= nd_bits) return;
  const std::size_t nd_words = word_count(nd_bits);
  const std::size_t ns_words = word_count(ns_bits);
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  if (bs == 0) {
    const std::size_t jend = std::min(nd_words, ns_words + ws);
    std::size_t j = ws;
    for (; j + 4 <= jend; j += 4) {
      __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + j));
      __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j - ws));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_or_si256(d, s));
    }
    for (; j < jend; ++j) dst[j] |= src[j - ws];
  } else {
    const std::size_t jend = std::min(nd_words, ns_words + ws + 1);
    std::size_t j = ws;
    // first word has no predecessor; handle it (and any short run) scalar
    if (j < jend) {
      dst[j] |= src[0] << bs;
      ++j;
    }
    const __m256i vl = _mm256_set1_epi64x(static_cast<long long>(bs));
    const __m256i vr = _mm256_set1_epi64x(static_cast<long long>(kWordBits - bs));
    // vector body needs src[i-1..i+3] fully in range (i = j - ws)
    while (j + 4 <= jend && (j - ws) + 4 <= ns_words) {
      const std::size_t i = j - ws;
      __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
      __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + j));
      __m256i v = _mm256_or_si256(_mm256_sllv_epi64(lo, vl), _mm256_srlv_epi64(hi, vr));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_or_si256(d, v));
      j += 4;
    }
    for (; j < jend; ++j) {
      const std::size_t i = j - ws;
      const Word lo = (i < ns_words) ? src[i] : 0;
      const Word hi = src[i - 1];
      dst[j] |= (lo << bs) | (hi >> (kWordBits - bs));
    }
  }
  clear_tail(dst, nd_bits);
}

void and_shifted_avx2(Word* dst, std::size_t nd_bits, const Word* src,
                      std::size_t ns_bits, std::size_t shift) {
  assert(ns_bits >= nd_bits + shift);
  if (nd_bits == 0) return;
  const std::size_t nd_words = word_count(nd_bits);
  const std::size_t ns_words = word_count(ns_bits);
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  if (bs == 0) {
    std::size_t j = 0;
    for (; j + 4 <= nd_words; j += 4) {
      __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + j));
      __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j + ws));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_and_si256(d, s));
    }
    for (; j < nd_words; ++j) dst[j] &= src[j + ws];
  } else {
    const __m256i vr = _mm256_set1_epi64x(static_cast<long long>(bs));
    const __m256i vl = _mm256_set1_epi64x(static_cast<long long>(kWordBits - bs));
    std::size_t j = 0;
    // vector body needs src[i..i+4] in range (i = j + ws)
    while (j + 4 <= nd_words && (j + ws) + 5 <= ns_words) {
      const std::size_t i = j + ws;
      __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 1));
      __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + j));
      __m256i v = _mm256_or_si256(_mm256_srlv_epi64(lo, vr), _mm256_sllv_epi64(hi, vl));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_and_si256(d, v));
      j += 4;
    }
    for (; j < nd_words; ++j) {
      const std::size_t i = j + ws;
      const Word lo = src[i] >> bs;
      const Word hi = (i + 1 < ns_words) ? (src[i + 1] << (kWordBits - bs)) : 0;
      dst[j] &= lo | hi;
    }
  }
  clear_tail(dst, nd_bits);
}

std::uint64_t popcount_avx2(const Word* src, std::size_t nbits) {
  const std::size_t nwords = word_count(nbits);
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < nwords; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(src[i]));
  return total;
}

}  // namespace

const KernelSet* avx2_kernels() {
  static const KernelSet k{or_shifted_avx2, and_shifted_avx2, popcount_avx2, "avx2"};
  return &k;
}

}  // namespace nsg::kernels

#else

namespace nsg::kernels {
const KernelSet* avx2_kernels() { return nullptr; }
}  // namespace nsg::kernels

#endif
