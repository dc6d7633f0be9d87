#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// on x86-64 builds, an AVX2 version. The public entry points dispatch at
// runtime on CPU support; setting NETEMD_SIMD=scalar in the environment (or
// calling set_isa) pins the scalar path.

#include <cstddef>
#include <cstdint>
#include <span>

namespace netemd::simd {

enum class Isa { kScalar, kAvx2 };

/// Best instruction set compiled in and supported by this CPU.
Isa detected_isa() noexcept;
/// Instruction set currently used by the dispatching entry points.
Isa active_isa() noexcept;
/// Overrides dispatch. Requesting an unavailable ISA falls back to scalar.
void set_isa(Isa isa) noexcept;
const char* isa_name(Isa isa) noexcept;

/// Sum over segments i of the integral of |h| where h runs linearly from
/// h0[i] to h1[i] over a segment of length width[i] >= 0. When the endpoints
/// straddle zero the segment is split at the crossing.
double abs_linear_integral(std::span<const double> h0, std::span<const double> h1,
                           std::span<const double> width);

/// |a ∩ b| for strictly increasing sequences.
std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

namespace scalar {
double abs_linear_integral(std::span<const double> h0, std::span<const double> h1,
                           std::span<const double> width);
std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
}  // namespace scalar

namespace avx2 {
// Only callable when detected_isa() == Isa::kAvx2.
double abs_linear_integral(std::span<const double> h0, std::span<const double> h1,
                           std::span<const double> width);
std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
}  // namespace avx2

}  // namespace netemd::simd
