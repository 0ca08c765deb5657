#include "schemoid/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace schemoid::kernels {

namespace {

// t < p + p*p < 2^30 for p < 2^15, but the float reduction below needs t to be
// exact in a float mantissa, so large p takes the two-step path.
constexpr std::uint32_t kFloatReduceLimit = 1u << 11;

// r = t mod p for lanes with 0 <= t < 2^24. floor(t * (1/p)) is off by at most
// one, which the two conditional corrections absorb.
__attribute__((target("avx2"))) inline __m256i reduce_small(__m256i t, __m256 invp, __m256i vp,
                                                            __m256i vpm1) {
  __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(t), invp));
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(_mm256_cvttps_epi32(q), vp));
  // r in [-p, 2p)
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
  __m256i big = _mm256_cmpgt_epi32(r, vpm1);
  return _mm256_sub_epi32(r, _mm256_and_si256(big, vp));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x,
                                                   std::uint32_t c, std::size_t n,
                                                   std::uint32_t p) {
  if (c == 0) return;
  if (p >= kFloatReduceLimit) {
    axpy_mod_scalar(y, x, c, n, p);
    return;
  }
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256 invp = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i t = _mm256_add_epi32(vy, _mm256_mullo_epi32(vc, vx));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_small(t, invp, vp, vpm1));
  }
  if (i < n) axpy_mod_scalar(y + i, x + i, c, n - i, p);
}

__attribute__((target("avx2"))) void scale_mod_avx2(std::uint32_t* y, std::uint32_t c,
                                                    std::size_t n, std::uint32_t p) {
  if (p >= kFloatReduceLimit) {
    scale_mod_scalar(y, c, n, p);
    return;
  }
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256 invp = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i t = _mm256_mullo_epi32(vc, vy);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_small(t, invp, vp, vpm1));
  }
  if (i < n) scale_mod_scalar(y + i, c, n - i, p);
}

}  // namespace schemoid::kernels

#endif
