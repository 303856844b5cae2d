#include "nsg/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace nsg::kernels {

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

const KernelSet& select() {
  const char* env = std::getenv("NSG_KERNELS");
  const bool avx2_ok = avx2_kernels() != nullptr && cpu_supports_avx2();
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return scalar_kernels();
    if (std::strcmp(env, "avx2") == 0) {
      if (avx2_ok) return *avx2_kernels();
      std::fprintf(stderr, "nsg: NSG_KERNELS=avx2 requested but AVX2 is unavailable; using scalar kernels\n");
      return scalar_kernels();
    }
    std::fprintf(stderr, "nsg: unknown NSG_KERNELS value '%s'; using scalar kernels\n", env);
    return scalar_kernels();
  }
  return avx2_ok ? *avx2_kernels() : scalar_kernels();
}

}  // namespace

const KernelSet& active_kernels() {
  static const KernelSet& chosen = select();
  return chosen;
}

}  // namespace nsg::kernels
