#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sgr/bigint.hpp"
#include "sgr/polyring.hpp"

namespace sgr {

/// The dilation r * Delta_d of the standard d-simplex, d >= 1, r >= 0.
class DilatedSimplex {
 public:
  /// Throws InvalidArgument when d == 0.
  DilatedSimplex(std::size_t d, std::size_t r);

  std::size_t dim() const noexcept { return d_; }
  std::size_t dilation() const noexcept { return r_; }

  friend bool operator==(const DilatedSimplex&, const DilatedSimplex&) = default;

 private:
  std::size_t d_;
  std::size_t r_;
};

/// A nonnegative integer vector. Ordering is lexicographic: a < b iff the
/// leftmost nonzero entry of a - b is negative.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}

  /// Validated construction: the point must have simplex.dim() coordinates
  /// summing to at most simplex.dilation(). Throws DimensionMismatch or
  /// InvalidArgument.
  static LatticePoint in(const DilatedSimplex& simplex, std::vector<std::uint32_t> coords);

  std::span<const std::uint32_t> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::uint64_t sum() const noexcept;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend std::strong_ordering operator<=>(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<std::uint32_t> coords_;
};

/// Positive integer grading vector.
class WeightVector {
 public:
  /// Throws InvalidArgument if any entry is zero or the vector is empty.
  explicit WeightVector(std::vector<std::uint32_t> weights);

  /// (1, 1, ..., 1)
  static WeightVector ones(std::size_t d);
  /// (1, 2, ..., d)
  static WeightVector staircase(std::size_t d);

  std::span<const std::uint32_t> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }

  /// Dot product with a coordinate vector of the same length.
  std::uint64_t weigh(std::span<const std::uint32_t> coords) const;
  /// Largest weight attained on r * Delta_d: r * max(w).
  std::uint64_t max_level(std::size_t r) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::uint32_t> weights_;
};

struct SliceClass {
  std::uint64_t level = 0;
  std::vector<LatticePoint> points;  // lexicographic order
};

/// Walks the lattice points of a dilated simplex in lexicographic order
/// without materializing them.
///
///   LatticePointCursor cur(simplex);
///   do { use(cur.coords()); } while (cur.advance());
class LatticePointCursor {
 public:
  explicit LatticePointCursor(const DilatedSimplex& simplex);

  std::span<const std::uint32_t> coords() const noexcept { return coords_; }
  std::uint64_t sum() const noexcept { return sum_; }
  /// Moves to the lexicographic successor; false once the last point was visited.
  bool advance();

 private:
  std::size_t r_;
  std::vector<std::uint32_t> coords_;
  std::uint64_t sum_ = 0;
};

std::vector<LatticePoint> enumerate_lattice_points(const DilatedSimplex& simplex);

/// C(r + d, d), by closed form.
BigInt count_lattice_points(const DilatedSimplex& simplex);

/// Number of points at each level 0..w.max_level(r), streaming.
/// Throws DimensionMismatch when w.size() != d.
std::vector<BigInt> slice_counts(const DilatedSimplex& simplex, const WeightVector& w);

/// Points grouped by weight; empty levels are kept as empty classes.
/// Throws DimensionMismatch when w.size() != d.
std::vector<SliceClass> slice_classes(const DilatedSimplex& simplex, const WeightVector& w);

/// sum_{k=0}^{r} C(k+d-1, d-1) t^k
Polynomial dilation_polynomial(const DilatedSimplex& simplex);

/// sum_m #{points of weight m} z^m. Throws DimensionMismatch.
Polynomial weighted_polynomial(const DilatedSimplex& simplex, const WeightVector& w);

/// Truncated expansion of 1/(1-z)^(d+1); coefficient of z^r is C(r+d, d).
Polynomial ehrhart_generating_series(std::size_t d, std::size_t max_z);

/// Truncated expansion of 1/((1-z)(1-tz)^d) = sum_r T_r(t) z^r.
/// No extra numerator z: z/((1-z)(1-tz)^d) has a zero constant term, but
/// T_0 = 1 (the origin).
BiSeries dilation_generating_series(std::size_t d, std::size_t max_t, std::size_t max_z);

}  // namespace sgr
