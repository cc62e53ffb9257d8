#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sgr/bigint.hpp"
#include "sgr/polyring.hpp"
#include "sgr/simplex.hpp"

namespace sgr {

/// Semistandard filling of a one-row Young diagram: a weakly increasing word
/// over {1, 2, ...}. Length 0 is the empty tableau.
///
/// Canonical order is by length, then lexicographically by entries.
class RowTableau {
 public:
  RowTableau() = default;
  /// Throws InvalidArgument if an entry is 0 or the word decreases somewhere.
  explicit RowTableau(std::vector<std::uint32_t> entries);

  std::span<const std::uint32_t> entries() const noexcept { return entries_; }
  std::size_t length() const noexcept { return entries_.size(); }
  bool is_empty() const noexcept { return entries_.empty(); }
  /// Largest letter used, 0 for the empty tableau.
  std::uint32_t max_letter() const noexcept { return entries_.empty() ? 0 : entries_.back(); }

  friend bool operator==(const RowTableau&, const RowTableau&) = default;
  friend std::strong_ordering operator<=>(const RowTableau& a, const RowTableau& b);

 private:
  std::vector<std::uint32_t> entries_;
};

/// t_1^{a_1} ... t_d^{a_d}, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }
  std::size_t num_vars() const noexcept { return exponents_.size(); }
  std::uint64_t total_degree() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// All fillings of one-row shapes with 0..r boxes from {1..d}, canonical order.
std::vector<RowTableau> enumerate_row_tableaux(std::size_t d, std::size_t r);

/// Coordinate j is the multiplicity of letter j + 1.
/// Throws EntryOutOfRange if some entry exceeds d.
LatticePoint tableau_to_point(const RowTableau& tableau, std::size_t d);

/// The unique weakly increasing word with letter j + 1 repeated v_j times.
RowTableau point_to_tableau(const LatticePoint& point);

/// Number of semistandard fillings of the row shape (k) from {1..d}, via the
/// product formula prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
BigInt count_ssyt_row(std::size_t d, std::size_t k);

/// sum_T t^{|T|} over the d-filling set with at most r boxes, by enumeration.
Polynomial semistandard_polynomial(std::size_t d, std::size_t r);

/// Exponent vectors of the monomials attached to the fillings, in the order of
/// enumerate_lattice_points.
std::vector<Monomial> grassmannian_monomials(std::size_t d, std::size_t r);

/// Smallest r with m among grassmannian_monomials(d, r): the total degree.
std::uint64_t minimal_grassmannian_index(const Monomial& m);

bool is_grassmannian_member(const Monomial& m, std::size_t d, std::size_t r);

/// Character of Sym^0 + ... + Sym^r of C^d at diag(values): the sum over all
/// fillings T of prod_j values[j]^{mult of j in T}. Evaluated as
/// h_0 + ... + h_r with a recurrence over letters.
/// Throws DimensionMismatch when values.size() != d.
BigInt character_evaluate(std::size_t d, std::size_t r, std::span<const BigInt> values);

}  // namespace sgr
