#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "nsg/kernels.hpp"

using namespace nsg::kernels;

namespace {

// bit-by-bit models of the kernel semantics
std::vector<bool> unpack(const std::vector<Word>& words, std::size_t nbits) {
  std::vector<bool> out(nbits);
  for (std::size_t i = 0; i < nbits; ++i) out[i] = (words[i / 64] >> (i % 64)) & 1u;
  return out;
}

std::vector<Word> pack(const std::vector<bool>& bits) {
  std::vector<Word> out(word_count(bits.size()), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 64] |= Word(1) << (i % 64);
  }
  return out;
}

std::vector<bool> model_or_shifted(std::vector<bool> dst, const std::vector<bool>& src, std::size_t shift) {
  for (std::size_t p = 0; p < dst.size(); ++p) {
    if (p >= shift && p - shift < src.size() && src[p - shift]) dst[p] = true;
  }
  return dst;
}

std::vector<bool> model_and_shifted(std::vector<bool> dst, const std::vector<bool>& src, std::size_t shift) {
  for (std::size_t p = 0; p < dst.size(); ++p) {
    dst[p] = dst[p] && src[p + shift];
  }
  return dst;
}

std::vector<bool> random_bits(std::mt19937_64& rng, std::size_t n) {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (rng() & 1u) != 0;
  return out;
}

void run_against_model(const KernelSet& kernels) {
  std::mt19937_64 rng(12345);
  const std::size_t sizes[] = {1, 3, 63, 64, 65, 127, 128, 200, 511, 1024};
  const std::size_t shifts[] = {0, 1, 7, 63, 64, 65, 128, 130};
  for (std::size_t nd : sizes) {
    for (std::size_t shift : shifts) {
      for (std::size_t ns : {std::size_t(1), nd / 2 + 1, nd, nd + 70}) {
        const auto dst_bits = random_bits(rng, nd);
        const auto src_bits = random_bits(rng, ns);
        auto dst = pack(dst_bits);
        const auto src = pack(src_bits);
        kernels.or_shifted(dst.data(), nd, src.data(), ns, shift);
        CHECK(unpack(dst, nd) == model_or_shifted(dst_bits, src_bits, shift));
      }
      {
        const std::size_t ns = nd + shift + (rng() % 80);
        const auto dst_bits = random_bits(rng, nd);
        const auto src_bits = random_bits(rng, ns);
        auto dst = pack(dst_bits);
        const auto src = pack(src_bits);
        kernels.and_shifted(dst.data(), nd, src.data(), ns, shift);
        CHECK(unpack(dst, nd) == model_and_shifted(dst_bits, src_bits, shift));
      }
    }
    const auto bits = random_bits(rng, nd);
    const auto words = pack(bits);
    std::uint64_t expected = 0;
    for (bool b : bits) expected += b ? 1 : 0;
    CHECK(kernels.popcount(words.data(), nd) == expected);
  }
}

}  // namespace

TEST_CASE("scalar kernels match the bit-level model") { run_against_model(scalar_kernels()); }

TEST_CASE("avx2 kernels match the bit-level model") {
  if (avx2_kernels() == nullptr || !cpu_supports_avx2()) return;
  run_against_model(*avx2_kernels());
}

TEST_CASE("avx2 and scalar kernels agree on random inputs") {
  if (avx2_kernels() == nullptr || !cpu_supports_avx2()) return;
  const KernelSet& simd = *avx2_kernels();
  const KernelSet& ref = scalar_kernels();
  std::mt19937_64 rng(99);
  for (int round = 0; round < 500; ++round) {
    const std::size_t nd = 1 + rng() % 700;
    const std::size_t shift = rng() % 200;
    const std::size_t ns = nd + shift + rng() % 100;
    std::vector<Word> a(word_count(nd)), src(word_count(ns));
    for (auto& w : a) w = rng();
    if (nd % 64) a.back() &= (~Word(0)) >> (64 - nd % 64);
    for (auto& w : src) w = rng();
    if (ns % 64) src.back() &= (~Word(0)) >> (64 - ns % 64);

    auto b = a;
    ref.or_shifted(a.data(), nd, src.data(), ns, shift);
    simd.or_shifted(b.data(), nd, src.data(), ns, shift);
    CHECK(a == b);

    auto c = a;
    b = a;
    ref.and_shifted(c.data(), nd, src.data(), ns, shift);
    simd.and_shifted(b.data(), nd, src.data(), ns, shift);
    CHECK(c == b);

    CHECK(ref.popcount(src.data(), ns) == simd.popcount(src.data(), ns));
  }
}

TEST_CASE("runtime dispatch picks a usable kernel set") {
  const KernelSet& active = active_kernels();
  CHECK((std::strcmp(active.name, "scalar") == 0 || std::strcmp(active.name, "avx2") == 0));
  if (std::strcmp(active.name, "avx2") == 0) CHECK(cpu_supports_avx2());
}
