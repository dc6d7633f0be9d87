#include "netemd/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace netemd::simd {

namespace {

Isa probe() noexcept {
#if defined(NETEMD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

Isa initial_isa() noexcept {
  const char* env = std::getenv("NETEMD_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::kScalar;
  return detected_isa();
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa detected_isa() noexcept {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) noexcept {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) isa = Isa::kScalar;
  current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kAvx2:
      return "avx2";
    case Isa::kScalar:
      break;
  }
  return "scalar";
}

double abs_linear_integral(std::span<const double> h0, std::span<const double> h1,
                           std::span<const double> width) {
#if defined(NETEMD_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::abs_linear_integral(h0, h1, width);
#endif
  return scalar::abs_linear_integral(h0, h1, width);
}

std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
#if defined(NETEMD_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::intersect_count(a, b);
#endif
  return scalar::intersect_count(a, b);
}

}  // namespace netemd::simd
