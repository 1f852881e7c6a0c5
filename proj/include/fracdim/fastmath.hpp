#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define FRACDIM_HAVE_AVX2 1
#endif

// Specialized log2/exp2 for the pairwise kernel. The inverse-power sums need
// billions of x^(-s/2) evaluations; libm's exp/log cost ~5 ns each, which does
// not fit the acceptance-time budget. These use the same polynomials in the
// scalar and SIMD paths: log2 via atanh series after mantissa renormalization
// to [sqrt(1/2), sqrt(2)), exp2 via degree-13 Taylor on [-ln2/2, ln2/2] plus
// exponent-bit assembly. Max observed relative error vs libm is ~2e-16
// (tested in test_fastmath), far inside the kernel's 1e-10 budget.
//
// Domain: strictly positive normal doubles for log2; |y| <= ~1000 for exp2.
// Subnormal inputs are NOT handled (callers reject them first).

namespace fracdim::fastmath {

inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kLn2 = 0.6931471805599453;
inline constexpr double kTwoInvLn2 = 2.8853900817779268;  // 2/ln2

inline double log2(double x) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  std::int32_t e = static_cast<std::int32_t>((bits >> 52) & 0x7FF) - 1023;
  double m = std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFull) |
                                   0x3FF0000000000000ull);
  if (m >= kSqrt2) {
    m *= 0.5;
    e += 1;
  }
  const double r = (m - 1.0) / (m + 1.0);
  const double r2 = r * r;
  double p = 1.0 / 19.0;
  p = std::fma(p, r2, 1.0 / 17.0);
  p = std::fma(p, r2, 1.0 / 15.0);
  p = std::fma(p, r2, 1.0 / 13.0);
  p = std::fma(p, r2, 1.0 / 11.0);
  p = std::fma(p, r2, 1.0 / 9.0);
  p = std::fma(p, r2, 1.0 / 7.0);
  p = std::fma(p, r2, 1.0 / 5.0);
  p = std::fma(p, r2, 1.0 / 3.0);
  p = std::fma(p, r2, 1.0);
  return std::fma(kTwoInvLn2 * r, p, static_cast<double>(e));
}

inline double exp2(double y) {
  const double kd = std::nearbyint(y);
  const double t = (y - kd) * kLn2;
  double p = 1.0 / 6227020800.0;
  p = std::fma(p, t, 1.0 / 479001600.0);
  p = std::fma(p, t, 1.0 / 39916800.0);
  p = std::fma(p, t, 1.0 / 3628800.0);
  p = std::fma(p, t, 1.0 / 362880.0);
  p = std::fma(p, t, 1.0 / 40320.0);
  p = std::fma(p, t, 1.0 / 5040.0);
  p = std::fma(p, t, 1.0 / 720.0);
  p = std::fma(p, t, 1.0 / 120.0);
  p = std::fma(p, t, 1.0 / 24.0);
  p = std::fma(p, t, 1.0 / 6.0);
  p = std::fma(p, t, 0.5);
  p = std::fma(p, t, 1.0);
  p = std::fma(p, t, 1.0);
  const auto k = static_cast<std::int32_t>(kd);
  const std::uint64_t scale =
      static_cast<std::uint64_t>(static_cast<std::uint32_t>(k + 1023)) << 52;
  return p * std::bit_cast<double>(scale);
}

#ifdef FRACDIM_HAVE_AVX2

inline __m256d log2x4(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i expi = _mm256_srli_epi64(bits, 52);
  const __m256i mbits =
      _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll)),
                      _mm256_set1_epi64x(0x3FF0000000000000ll));
  __m256d m = _mm256_castsi256_pd(mbits);
  const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(kSqrt2), _CMP_GE_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  // biased exponent fits in int32; pack the low dwords and convert
  const __m256i lo32 = _mm256_shuffle_epi32(expi, _MM_SHUFFLE(2, 0, 2, 0));
  const __m128i packed = _mm_unpacklo_epi64(_mm256_castsi256_si128(lo32),
                                            _mm256_extracti128_si256(lo32, 1));
  __m256d ed = _mm256_sub_pd(_mm256_cvtepi32_pd(packed), _mm256_set1_pd(1023.0));
  ed = _mm256_add_pd(ed, _mm256_and_pd(big, _mm256_set1_pd(1.0)));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d r = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d r2 = _mm256_mul_pd(r, r);
  __m256d p = _mm256_set1_pd(1.0 / 19.0);
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 17.0));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 15.0));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 13.0));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 11.0));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 9.0));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 7.0));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 5.0));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 3.0));
  p = _mm256_fmadd_pd(p, r2, one);
  return _mm256_fmadd_pd(_mm256_mul_pd(_mm256_set1_pd(kTwoInvLn2), r), p, ed);
}

inline __m256d exp2x4(__m256d y) {
  const __m256d kd =
      _mm256_round_pd(y, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d t =
      _mm256_mul_pd(_mm256_sub_pd(y, kd), _mm256_set1_pd(kLn2));
  __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0 / 479001600.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0 / 39916800.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0 / 3628800.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0 / 362880.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0 / 40320.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0 / 5040.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0 / 720.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0 / 120.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0 / 24.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0 / 6.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(0.5));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.0));
  const __m128i k32 = _mm256_cvtpd_epi32(kd);
  const __m256i k64 = _mm256_cvtepi32_epi64(k32);
  const __m256i scale =
      _mm256_slli_epi64(_mm256_add_epi64(k64, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(scale));
}

#endif  // FRACDIM_HAVE_AVX2

}  // namespace fracdim::fastmath
