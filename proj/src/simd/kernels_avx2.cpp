#include <immintrin.h>

#include <cmath>

#include "netemd/simd/kernels.hpp"

namespace netemd::simd::avx2 {

double abs_linear_integral(std::span<const double> h0, std::span<const double> h1,
                           std::span<const double> width) {
  const std::size_t n = width.size();
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = _mm256_setzero_pd();

  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d a = _mm256_loadu_pd(h0.data() + i);
    const __m256d b = _mm256_loadu_pd(h1.data() + i);
    const __m256d w = _mm256_mul_pd(half, _mm256_loadu_pd(width.data() + i));
    const __m256d abs_sum = _mm256_add_pd(_mm256_andnot_pd(sign_bit, a), _mm256_andnot_pd(sign_bit, b));
    const __m256d same_sign = _mm256_cmp_pd(_mm256_mul_pd(a, b), zero, _CMP_GE_OQ);
    const __m256d plain = _mm256_mul_pd(w, abs_sum);
    // Lanes with abs_sum == 0 always take the same-sign branch, so the
    // division below is never selected for them.
    const __m256d squares = _mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    const __m256d crossing = _mm256_div_pd(_mm256_mul_pd(w, squares), abs_sum);
    acc = _mm256_add_pd(acc, _mm256_blendv_pd(crossing, plain, same_sign));
  }

  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  if (n4 < n) total += scalar::abs_linear_integral(h0.subspan(n4), h1.subspan(n4), width.subspan(n4));
  return total;
}

std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::size_t i = 0, j = 0, count = 0;
  const __m256i rot1 = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);

  while (i + 8 <= a.size() && j + 8 <= b.size()) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + j));
    __m256i hit = _mm256_cmpeq_epi32(va, vb);
    for (int r = 1; r < 8; ++r) {
      vb = _mm256_permutevar8x32_epi32(vb, rot1);
      hit = _mm256_or_si256(hit, _mm256_cmpeq_epi32(va, vb));
    }
    count += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_ps(_mm256_castsi256_ps(hit))));

    const std::uint32_t a_max = a[i + 7];
    const std::uint32_t b_max = b[j + 7];
    if (a_max <= b_max) i += 8;
    if (b_max <= a_max) j += 8;
  }
  return count + scalar::intersect_count(a.subspan(i), b.subspan(j));
}

}  // namespace netemd::simd::avx2
