#include "sgr/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgr/errors.hpp"

namespace sgr {

namespace {

void check_weight_dim(const DilatedSimplex& simplex, const WeightVector& w) {
  if (w.size() != simplex.dim()) {
    throw DimensionMismatch("weight vector has length " + std::to_string(w.size()) + ", expected d = " +
                            std::to_string(simplex.dim()));
  }
}

}  // namespace

DilatedSimplex::DilatedSimplex(std::size_t d, std::size_t r) : d_(d), r_(r) {
  if (d == 0) throw InvalidArgument("simplex dimension d must be at least 1");
}

LatticePoint LatticePoint::in(const DilatedSimplex& simplex, std::vector<std::uint32_t> coords) {
  if (coords.size() != simplex.dim()) {
    throw DimensionMismatch("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                            std::to_string(simplex.dim()));
  }
  LatticePoint p(std::move(coords));
  if (p.sum() > simplex.dilation()) {
    throw InvalidArgument("coordinate sum " + std::to_string(p.sum()) + " exceeds dilation " +
                          std::to_string(simplex.dilation()));
  }
  return p;
}

std::uint64_t LatticePoint::sum() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), std::uint64_t{0});
}

WeightVector::WeightVector(std::vector<std::uint32_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidArgument("weight vector must be nonempty");
  if (std::find(weights_.begin(), weights_.end(), 0u) != weights_.end()) {
    throw InvalidArgument("weights must be positive");
  }
}

WeightVector WeightVector::ones(std::size_t d) { return WeightVector(std::vector<std::uint32_t>(d, 1)); }

WeightVector WeightVector::staircase(std::size_t d) {
  std::vector<std::uint32_t> w(d);
  std::iota(w.begin(), w.end(), 1u);
  return WeightVector(std::move(w));
}

std::uint64_t WeightVector::weigh(std::span<const std::uint32_t> coords) const {
  if (coords.size() != weights_.size()) throw DimensionMismatch("weight/point length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) acc += std::uint64_t{weights_[i]} * coords[i];
  return acc;
}

std::uint64_t WeightVector::max_level(std::size_t r) const {
  return std::uint64_t{*std::max_element(weights_.begin(), weights_.end())} * r;
}

LatticePointCursor::LatticePointCursor(const DilatedSimplex& simplex)
    : r_(simplex.dilation()), coords_(simplex.dim(), 0) {}

bool LatticePointCursor::advance() {
  // The successor bumps the rightmost coordinate i whose prefix sum
  // x_1 + ... + x_i is still below r, and clears everything after it.
  std::uint64_t prefix = sum_;
  for (std::size_t i = coords_.size(); i-- > 0;) {
    if (prefix < r_) {
      sum_ = prefix + 1;
      ++coords_[i];
      std::fill(coords_.begin() + static_cast<std::ptrdiff_t>(i) + 1, coords_.end(), 0u);
      return true;
    }
    prefix -= coords_[i];
  }
  return false;
}

std::vector<LatticePoint> enumerate_lattice_points(const DilatedSimplex& simplex) {
  std::vector<LatticePoint> out;
  LatticePointCursor cur(simplex);
  do {
    out.emplace_back(std::vector<std::uint32_t>(cur.coords().begin(), cur.coords().end()));
  } while (cur.advance());
  return out;
}

BigInt count_lattice_points(const DilatedSimplex& simplex) {
  return binomial(simplex.dilation() + simplex.dim(), simplex.dim());
}

std::vector<BigInt> slice_counts(const DilatedSimplex& simplex, const WeightVector& w) {
  check_weight_dim(simplex, w);
  std::vector<std::uint64_t> counts(w.max_level(simplex.dilation()) + 1, 0);
  LatticePointCursor cur(simplex);
  do {
    ++counts[w.weigh(cur.coords())];
  } while (cur.advance());
  return {counts.begin(), counts.end()};
}

std::vector<SliceClass> slice_classes(const DilatedSimplex& simplex, const WeightVector& w) {
  check_weight_dim(simplex, w);
  std::vector<SliceClass> classes(w.max_level(simplex.dilation()) + 1);
  for (std::size_t k = 0; k < classes.size(); ++k) classes[k].level = k;
  LatticePointCursor cur(simplex);
  do {
    classes[w.weigh(cur.coords())].points.emplace_back(
        std::vector<std::uint32_t>(cur.coords().begin(), cur.coords().end()));
  } while (cur.advance());
  return classes;
}

Polynomial dilation_polynomial(const DilatedSimplex& simplex) {
  const std::size_t d = simplex.dim();
  std::vector<BigInt> c(simplex.dilation() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = binomial(k + d - 1, d - 1);
  return Polynomial(std::move(c));
}

Polynomial weighted_polynomial(const DilatedSimplex& simplex, const WeightVector& w) {
  return Polynomial(slice_counts(simplex, w));
}

Polynomial ehrhart_generating_series(std::size_t d, std::size_t max_z) {
  if (d == 0) throw InvalidArgument("simplex dimension d must be at least 1");
  // (1 - z)^(d+1) as a series in z alone.
  BiSeries den = BiSeries::one(0, max_z);
  const BiSeries one_minus_z = BiSeries::from_z_polynomial(Polynomial::one_minus_power(1), 0, max_z);
  for (std::size_t i = 0; i <= d; ++i) den = den * one_minus_z;
  return series_recip_truncated(den, 0, max_z).t_coefficient(0);
}

BiSeries dilation_generating_series(std::size_t d, std::size_t max_t, std::size_t max_z) {
  if (d == 0) throw InvalidArgument("simplex dimension d must be at least 1");
  BiSeries den = BiSeries::from_z_polynomial(Polynomial::one_minus_power(1), max_t, max_z);
  BiSeries one_minus_tz(max_t, max_z);
  one_minus_tz.at(0, 0) = 1;
  if (max_t >= 1 && max_z >= 1) one_minus_tz.at(1, 1) = -1;
  for (std::size_t i = 0; i < d; ++i) den = den * one_minus_tz;
  return series_recip_truncated(den, max_t, max_z);
}

}  // namespace sgr
