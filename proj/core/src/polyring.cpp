#include "sgr/polyring.hpp"

#include <algorithm>
#include <utility>

#include "sgr/errors.hpp"

namespace sgr {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(BigInt value) { return Polynomial({std::move(value)}); }

Polynomial Polynomial::monomial(BigInt coeff, std::size_t degree) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coeff);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::one_minus_power(std::size_t k) {
  if (k == 0) return {};
  std::vector<BigInt> c(k + 1);
  c[0] = 1;
  c[k] = -1;
  return Polynomial(std::move(c));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

Polynomial::Degree Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt Polynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt Polynomial::coefficient_sum() const {
  BigInt acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

bool Polynomial::is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

Polynomial Polynomial::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return Polynomial(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(max_degree + 1)));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial poly_div_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw NonExactDivision("division by the zero polynomial");
  if (p.is_zero()) return {};
  const auto& divisor = q.coeffs();
  const std::size_t dq = divisor.size() - 1;
  std::vector<BigInt> rem = p.coeffs();
  if (rem.size() - 1 < dq) throw NonExactDivision("dividend has lower degree than divisor");

  const BigInt& lead = divisor.back();
  std::vector<BigInt> quot(rem.size() - dq);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + dq];
    if (top == 0) continue;
    BigInt r;
    BigInt c;
    divide_qr(top, lead, c, r);
    if (r != 0) throw NonExactDivision("long division produced a non-integral quotient coefficient");
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= c * divisor[j];
    quot[k] = std::move(c);
  }
  for (std::size_t i = 0; i < dq; ++i) {
    if (rem[i] != 0) throw NonExactDivision("nonzero remainder");
  }
  return Polynomial(std::move(quot));
}

BiSeries::BiSeries(std::size_t max_t, std::size_t max_z)
    : max_t_(max_t), max_z_(max_z), data_((max_t + 1) * (max_z + 1)) {}

BiSeries BiSeries::one(std::size_t max_t, std::size_t max_z) {
  BiSeries s(max_t, max_z);
  s.at(0, 0) = 1;
  return s;
}

BiSeries BiSeries::from_t_polynomial(const Polynomial& p, std::size_t max_t, std::size_t max_z) {
  BiSeries s(max_t, max_z);
  for (std::size_t i = 0; i < p.coeffs().size() && i <= max_t; ++i) s.at(i, 0) = p.coeffs()[i];
  return s;
}

BiSeries BiSeries::from_z_polynomial(const Polynomial& p, std::size_t max_t, std::size_t max_z) {
  BiSeries s(max_t, max_z);
  for (std::size_t j = 0; j < p.coeffs().size() && j <= max_z; ++j) s.at(0, j) = p.coeffs()[j];
  return s;
}

const BigInt& BiSeries::at(std::size_t i, std::size_t j) const {
  if (i > max_t_ || j > max_z_) throw InvalidArgument("BiSeries index out of truncation window");
  return data_[i * (max_z_ + 1) + j];
}

BigInt& BiSeries::at(std::size_t i, std::size_t j) {
  if (i > max_t_ || j > max_z_) throw InvalidArgument("BiSeries index out of truncation window");
  return data_[i * (max_z_ + 1) + j];
}

Polynomial BiSeries::z_coefficient(std::size_t j) const {
  std::vector<BigInt> c(max_t_ + 1);
  for (std::size_t i = 0; i <= max_t_; ++i) c[i] = at(i, j);
  return Polynomial(std::move(c));
}

Polynomial BiSeries::t_coefficient(std::size_t i) const {
  std::vector<BigInt> c(max_z_ + 1);
  for (std::size_t j = 0; j <= max_z_; ++j) c[j] = at(i, j);
  return Polynomial(std::move(c));
}

BiSeries BiSeries::operator*(const BiSeries& other) const {
  BiSeries out(max_t_, max_z_);
  const std::size_t ot = std::min(max_t_, other.max_t_);
  const std::size_t oz = std::min(max_z_, other.max_z_);
  for (std::size_t a = 0; a <= max_t_; ++a) {
    for (std::size_t b = 0; b <= max_z_; ++b) {
      const BigInt& x = at(a, b);
      if (x == 0) continue;
      for (std::size_t c = 0; c <= ot && a + c <= max_t_; ++c) {
        for (std::size_t e = 0; e <= oz && b + e <= max_z_; ++e) {
          const BigInt& y = other.at(c, e);
          if (y != 0) out.data_[(a + c) * (max_z_ + 1) + b + e] += x * y;
        }
      }
    }
  }
  return out;
}

BiSeries series_recip_truncated(const BiSeries& den, std::size_t max_t, std::size_t max_z) {
  const BigInt& c0 = den.at(0, 0);
  if (c0 != 1 && c0 != -1) throw NonUnitConstantTerm("constant term " + c0.str() + " is not a unit in Z");

  const std::size_t dt = std::min(max_t, den.max_t());
  const std::size_t dz = std::min(max_z, den.max_z());
  BiSeries out(max_t, max_z);
  out.at(0, 0) = c0;  // 1/c0 == c0 for a unit
  for (std::size_t i = 0; i <= max_t; ++i) {
    for (std::size_t j = 0; j <= max_z; ++j) {
      if (i == 0 && j == 0) continue;
      // (den * out)(i, j) == 0 solved for out(i, j); every other term uses an
      // index that is componentwise smaller and therefore already filled in.
      BigInt acc = 0;
      for (std::size_t a = 0; a <= std::min(i, dt); ++a) {
        for (std::size_t b = 0; b <= std::min(j, dz); ++b) {
          if (a == 0 && b == 0) continue;
          const BigInt& x = den.at(a, b);
          if (x != 0) acc += x * out.at(i - a, j - b);
        }
      }
      out.at(i, j) = -acc * c0;
    }
  }
  return out;
}

}  // namespace sgr
