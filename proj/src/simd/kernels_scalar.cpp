#include <cmath>

#include "netemd/simd/kernels.hpp"

namespace netemd::simd::scalar {

double abs_linear_integral(std::span<const double> h0, std::span<const double> h1,
                           std::span<const double> width) {
  double total = 0.0;
  for (std::size_t i = 0; i < width.size(); ++i) {
    const double a = h0[i];
    const double b = h1[i];
    const double abs_sum = std::fabs(a) + std::fabs(b);
    if (a * b >= 0.0) {
      total += 0.5 * width[i] * abs_sum;
    } else {
      // Two triangles meeting at the zero crossing.
      total += 0.5 * width[i] * (a * a + b * b) / abs_sum;
    }
  }
  return total;
}

std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace netemd::simd::scalar
