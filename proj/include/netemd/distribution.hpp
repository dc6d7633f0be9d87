#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace netemd {

enum class AtomKind { kPoint, kUnitBin };

struct Atom {
  double location;
  double mass;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Probability distribution on the real line made of atoms of one kind.
///
/// kPoint atoms are point masses. kUnitBin atoms spread their mass uniformly
/// over [location - width/2, location + width/2]; every bin of a distribution
/// shares the same width, which starts at 1 for integer histograms and changes
/// under rescaling. Locations are strictly increasing and masses sum to 1.
class EmpiricalDistribution {
 public:
  EmpiricalDistribution() = default;

  /// Validates and stores `atoms`. Throws ParameterError if they are empty,
  /// unsorted, have non-positive mass, do not sum to 1 within 1e-12, or if
  /// bins would overlap.
  EmpiricalDistribution(AtomKind kind, std::vector<Atom> atoms, double width = 1.0);

  /// Point masses at `values`, equal values merged, each value weighted
  /// equally.
  static EmpiricalDistribution from_values(std::span<const double> values);
  /// Point masses at `locations` with masses proportional to `weights`.
  static EmpiricalDistribution from_weighted(std::span<const double> locations, std::span<const double> weights);
  /// Normalized histogram of integer values with unit-width bins centred on
  /// the integers. When every value is the same the result is a single point
  /// mass, matching the zero-variance convention used by emd_star.
  static EmpiricalDistribution histogram(std::span<const std::uint64_t> values);

  AtomKind kind() const noexcept { return kind_; }
  double width() const noexcept { return kind_ == AtomKind::kPoint ? 0.0 : width_; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  double mean() const noexcept;
  /// Variance of the distribution; bins contribute width^2 / 12 on top of the
  /// variance of their centres.
  double variance() const noexcept;
  /// Leftmost and rightmost points carrying mass.
  double support_min() const noexcept;
  double support_max() const noexcept;

  /// x -> x / sigma. Zero-variance distributions are returned unchanged.
  EmpiricalDistribution rescaled() const;
  EmpiricalDistribution translated(double shift) const;
  /// x -> scale * x + shift, scale > 0. Bin widths scale too.
  EmpiricalDistribution affine(double scale, double shift) const;

  friend bool operator==(const EmpiricalDistribution&, const EmpiricalDistribution&) = default;

 private:
  AtomKind kind_ = AtomKind::kPoint;
  double width_ = 1.0;
  std::vector<Atom> atoms_;
};

}  // namespace netemd
