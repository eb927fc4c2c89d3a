#include "qrep/simd/fp_kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace qrep::simd {

namespace {

// Exact conversions for integers below 2^52 via the 2^52 exponent trick.
inline __m256d u64_to_f64(__m256i v) {
  const __m256i magic_bits = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256d magic = _mm256_set1_pd(4503599627370496.0);  // 2^52
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic_bits)), magic);
}

inline __m256i f64_to_u64(__m256d v) {
  const __m256i magic_bits = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256d magic = _mm256_set1_pd(4503599627370496.0);
  return _mm256_xor_si256(_mm256_castpd_si256(_mm256_add_pd(v, magic)), magic_bits);
}

// x is an exact integer below 2^53; returns x mod p in [0, p).
inline __m256d reduce(__m256d x, __m256d pd, __m256d pinv) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, pinv));
  __m256d r = _mm256_fnmadd_pd(q, pd, x);
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pd));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
  return r;
}

}  // namespace

void axpy_mod_avx2(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t c, std::size_t n,
                   std::uint64_t p) {
  if (c == 0) return;
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d d = u64_to_f64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k)));
    const __m256d s = u64_to_f64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k)));
    const __m256d r = reduce(_mm256_fmadd_pd(cd, s, d), pd, pinv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), f64_to_u64(r));
  }
  axpy_mod_scalar(dst + k, src + k, c, n - k, p);
}

void scale_mod_avx2(std::uint64_t* dst, std::uint64_t c, std::size_t n, std::uint64_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d d = u64_to_f64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k)));
    const __m256d r = reduce(_mm256_mul_pd(cd, d), pd, pinv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), f64_to_u64(r));
  }
  scale_mod_scalar(dst + k, c, n - k, p);
}

}  // namespace qrep::simd

#endif
