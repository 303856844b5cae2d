#pragma once

#include <cstddef>
#include <cstdint>

// Bit-table kernels. Every set-arithmetic inner loop of the library (ideal
// sums, colon quotients, closure sieves, genus counts) reduces to the three
// operations below on LSB-first packed word arrays. A scalar reference
// implementation defines the semantics; an AVX2 variant is selected at
// runtime when the CPU supports it and is equivalence-tested against the
// scalar one.
//
// Conventions shared by all kernels:
//   * bit i of the table lives in word i/64, position i%64
//   * bits at positions >= the stated bit length are zero on input and are
//     left zero on output (callers rely on clean tails)

namespace nsg::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// dst[p] |= src[p - shift] for p in [shift, min(nd_bits, ns_bits + shift))
using OrShiftedFn = void (*)(Word* dst, std::size_t nd_bits, const Word* src,
                             std::size_t ns_bits, std::size_t shift);

// dst[p] &= src[p + shift] for p in [0, nd_bits); requires ns_bits >= nd_bits + shift
using AndShiftedFn = void (*)(Word* dst, std::size_t nd_bits, const Word* src,
                              std::size_t ns_bits, std::size_t shift);

// number of set bits in [0, nbits)
using PopcountFn = std::uint64_t (*)(const Word* src, std::size_t nbits);

struct KernelSet {
  OrShiftedFn or_shifted;
  AndShiftedFn and_shifted;
  PopcountFn popcount;
  const char* name;
};

// Reference implementation; always available.
const KernelSet& scalar_kernels();

// AVX2 implementation, or nullptr when the binary was built without AVX2
// support. Callers must additionally check cpu_supports_avx2() before use.
const KernelSet* avx2_kernels();

bool cpu_supports_avx2();

// Runtime selection: AVX2 when available, scalar otherwise. The environment
// variable NSG_KERNELS=scalar|avx2 forces a choice (an unsatisfiable forced
// choice falls back to scalar with a warning on stderr).
const KernelSet& active_kernels();

}  // namespace nsg::kernels
