#include "netemd/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "netemd/errors.hpp"

namespace netemd {

EmpiricalDistribution::EmpiricalDistribution(AtomKind kind, std::vector<Atom> atoms, double width)
    : kind_(kind), width_(width), atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw ParameterError("distribution needs at least one atom");
  if (kind_ == AtomKind::kUnitBin && !(width_ > 0.0 && std::isfinite(width_))) {
    throw ParameterError("bin width must be positive");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (!std::isfinite(a.location)) throw ParameterError("atom location must be finite");
    if (!(a.mass > 0.0)) throw ParameterError("atom mass must be positive");
    if (i > 0) {
      const double gap = a.location - atoms_[i - 1].location;
      if (!(gap > 0.0)) throw ParameterError("atom locations must be strictly increasing");
      if (kind_ == AtomKind::kUnitBin && gap < width_ * (1.0 - 1e-12)) {
        throw ParameterError("bins overlap");
      }
    }
    total += a.mass;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ParameterError("atom masses must sum to 1");
}

EmpiricalDistribution EmpiricalDistribution::from_values(std::span<const double> values) {
  std::vector<double> ones(values.size(), 1.0);
  return from_weighted(values, ones);
}

EmpiricalDistribution EmpiricalDistribution::from_weighted(std::span<const double> locations,
                                                           std::span<const double> weights) {
  if (locations.size() != weights.size()) throw ParameterError("locations and weights differ in length");
  std::map<double, double> merged;
  double total = 0.0;
  for (std::size_t i = 0; i < locations.size(); ++i) {
    if (!(weights[i] >= 0.0)) throw ParameterError("weights must be non-negative");
    if (weights[i] == 0.0) continue;
    merged[locations[i]] += weights[i];
    total += weights[i];
  }
  if (merged.empty()) throw ParameterError("distribution needs positive total weight");
  std::vector<Atom> atoms;
  atoms.reserve(merged.size());
  for (const auto& [x, w] : merged) atoms.push_back({x, w / total});
  // Put the rounding residue on the heaviest atom so the sum is 1.
  const double sum = std::accumulate(atoms.begin(), atoms.end(), 0.0, [](double s, const Atom& a) { return s + a.mass; });
  auto heaviest = std::max_element(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.mass < b.mass; });
  heaviest->mass += 1.0 - sum;
  return EmpiricalDistribution(AtomKind::kPoint, std::move(atoms));
}

EmpiricalDistribution EmpiricalDistribution::histogram(std::span<const std::uint64_t> values) {
  if (values.empty()) throw ParameterError("histogram of no values");
  std::map<std::uint64_t, std::size_t> counts;
  for (auto v : values) ++counts[v];
  const double n = static_cast<double>(values.size());
  std::vector<Atom> atoms;
  atoms.reserve(counts.size());
  for (const auto& [v, c] : counts) atoms.push_back({static_cast<double>(v), static_cast<double>(c) / n});
  const double sum = std::accumulate(atoms.begin(), atoms.end(), 0.0, [](double s, const Atom& a) { return s + a.mass; });
  auto heaviest = std::max_element(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.mass < b.mass; });
  heaviest->mass += 1.0 - sum;
  if (atoms.size() == 1) return EmpiricalDistribution(AtomKind::kPoint, std::move(atoms));
  return EmpiricalDistribution(AtomKind::kUnitBin, std::move(atoms), 1.0);
}

double EmpiricalDistribution::mean() const noexcept {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.mass * a.location;
  return m;
}

double EmpiricalDistribution::variance() const noexcept {
  const double mu = mean();
  double var = 0.0;
  for (const Atom& a : atoms_) {
    const double d = a.location - mu;
    var += a.mass * d * d;
  }
  if (kind_ == AtomKind::kUnitBin) var += width_ * width_ / 12.0;
  return var;
}

double EmpiricalDistribution::support_min() const noexcept {
  return atoms_.front().location - 0.5 * width();
}

double EmpiricalDistribution::support_max() const noexcept {
  return atoms_.back().location + 0.5 * width();
}

EmpiricalDistribution EmpiricalDistribution::rescaled() const {
  const double var = variance();
  if (!(var > 0.0)) return *this;
  const double sigma = std::sqrt(var);
  EmpiricalDistribution out = *this;
  for (Atom& a : out.atoms_) a.location /= sigma;
  out.width_ = width_ / sigma;
  return out;
}

EmpiricalDistribution EmpiricalDistribution::translated(double shift) const {
  EmpiricalDistribution out = *this;
  for (Atom& a : out.atoms_) a.location += shift;
  return out;
}

EmpiricalDistribution EmpiricalDistribution::affine(double scale, double shift) const {
  if (!(scale > 0.0)) throw ParameterError("affine scale must be positive");
  EmpiricalDistribution out = *this;
  for (Atom& a : out.atoms_) a.location = scale * a.location + shift;
  out.width_ = width_ * scale;
  return out;
}

}  // namespace netemd
