#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgr/bigint.hpp"

namespace sgr {

/// Dense univariate polynomial over the integers.
///
/// Coefficients are stored by ascending degree. The representation is kept
/// canonical: the leading coefficient is never zero, so the zero polynomial is
/// the empty coefficient sequence and two polynomials compare equal exactly
/// when they are equal as polynomials.
class Polynomial {
 public:
  /// Degree of a polynomial. An empty optional stands for the degree of the
  /// zero polynomial (minus infinity).
  using Degree = std::optional<std::size_t>;

  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(BigInt value);
  static Polynomial monomial(BigInt coeff, std::size_t degree);
  /// 1 - t^k
  static Polynomial one_minus_power(std::size_t k);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^k; zero past the degree.
  BigInt coeff(std::size_t k) const;
  Degree degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  BigInt evaluate(const BigInt& x) const;
  /// Sum of the coefficients, i.e. the value at 1.
  BigInt coefficient_sum() const;
  /// True when c_k = c_{deg-k} for all k. The zero polynomial is palindromic.
  bool is_palindromic() const;
  /// Keeps the terms of degree <= max_degree.
  Polynomial truncated(std::size_t max_degree) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// Quotient of an exact division in Z[t].
/// Throws NonExactDivision if q is zero, if a long-division step needs a
/// non-integral quotient coefficient, or if the remainder is nonzero.
Polynomial poly_div_exact(const Polynomial& p, const Polynomial& q);

/// Power series in t and z truncated to a fixed rectangle: c(i, j) is the
/// coefficient of t^i z^j for i <= max_t and j <= max_z.
class BiSeries {
 public:
  BiSeries(std::size_t max_t, std::size_t max_z);

  static BiSeries one(std::size_t max_t, std::size_t max_z);
  /// Embeds a polynomial in t (z_degree = 0) or z alone.
  static BiSeries from_t_polynomial(const Polynomial& p, std::size_t max_t, std::size_t max_z);
  static BiSeries from_z_polynomial(const Polynomial& p, std::size_t max_t, std::size_t max_z);

  std::size_t max_t() const noexcept { return max_t_; }
  std::size_t max_z() const noexcept { return max_z_; }

  const BigInt& at(std::size_t i, std::size_t j) const;
  BigInt& at(std::size_t i, std::size_t j);

  /// Coefficient of z^j as a polynomial in t (truncated at max_t).
  Polynomial z_coefficient(std::size_t j) const;
  /// Coefficient of t^i as a polynomial in z (truncated at max_z).
  Polynomial t_coefficient(std::size_t i) const;

  /// Truncated product; the result keeps this series' orders. Terms of the
  /// factors beyond those orders are ignored.
  BiSeries operator*(const BiSeries& other) const;
  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::size_t max_t_;
  std::size_t max_z_;
  std::vector<BigInt> data_;  // row-major, outer index = power of t
};

/// Inverse of den in Z[[t, z]] truncated at (max_t, max_z).
/// Throws NonUnitConstantTerm unless den's constant term is +1 or -1.
BiSeries series_recip_truncated(const BiSeries& den, std::size_t max_t, std::size_t max_z);

}  // namespace sgr
