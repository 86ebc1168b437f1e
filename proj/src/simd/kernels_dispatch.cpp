#include <cstdlib>
#include <cstring>

#include "spirit/simd/kernels.hpp"

namespace spirit::simd {

// Defined in kernels_avx2.cpp; returns nullptr when that TU was built
// without AVX2 support.
const Kernels* avx2_kernels_impl();

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Kernels& select() {
  const Kernels* avx2 = avx2_kernels();
  const char* env = std::getenv("SPIRIT_KERNELS");
  if (env != nullptr) {
    if (std::strcmp(env, "avx2") == 0 && avx2 != nullptr) return *avx2;
    return scalar_kernels();
  }
  return avx2 != nullptr ? *avx2 : scalar_kernels();
}

}  // namespace

const Kernels* avx2_kernels() {
  return cpu_has_avx2_fma() ? avx2_kernels_impl() : nullptr;
}

const Kernels& active_kernels() {
  static const Kernels& k = select();
  return k;
}

}  // namespace spirit::simd
