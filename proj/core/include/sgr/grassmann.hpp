#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sgr/polyring.hpp"

namespace sgr {

/// Integer partition: weakly decreasing positive parts. The empty sequence is
/// the partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws NotWeaklyDecreasing, or InvalidArgument on a zero part.
  explicit Partition(std::vector<std::uint32_t> parts);

  std::span<const std::uint32_t> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::uint64_t size() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
};

/// Weakly decreasing vector of exactly d nonnegative entries. Unlike
/// Partition it keeps its trailing zeros.
class BetaVector {
 public:
  BetaVector() = default;
  /// Throws NotWeaklyDecreasing.
  explicit BetaVector(std::vector<std::uint32_t> entries);

  std::span<const std::uint32_t> entries() const noexcept { return entries_; }
  std::size_t dim() const noexcept { return entries_.size(); }
  std::uint64_t size() const noexcept;
  /// Largest entry (0 for the zero vector or d = 0).
  std::uint32_t width() const noexcept { return entries_.empty() ? 0 : entries_.front(); }
  Partition to_partition() const;

  friend bool operator==(const BetaVector&, const BetaVector&) = default;
  friend std::strong_ordering operator<=>(const BetaVector&, const BetaVector&) = default;

 private:
  std::vector<std::uint32_t> entries_;
};

/// Upper triangular d x d matrix whose column k holds a_k on and above the
/// diagonal.
class TriangularMatrix {
 public:
  explicit TriangularMatrix(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  std::size_t dim() const noexcept { return exponents_.size(); }
  /// 0-based; zero below the diagonal.
  std::uint32_t entry(std::size_t row, std::size_t col) const;
  std::uint64_t row_sum(std::size_t row) const;
  std::uint64_t column_sum(std::size_t col) const;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Permutation of {1..n} in one-line notation with no descent except possibly
/// at position d.
class GrassmannianPermutation {
 public:
  GrassmannianPermutation(std::vector<std::uint32_t> one_line, std::size_t descent_position)
      : one_line_(std::move(one_line)), descent_position_(descent_position) {}

  std::span<const std::uint32_t> one_line() const noexcept { return one_line_; }
  std::size_t size() const noexcept { return one_line_.size(); }
  std::size_t descent_position() const noexcept { return descent_position_; }
  /// 1-based positions i with w_i > w_{i+1}.
  std::vector<std::size_t> descents() const;

  friend bool operator==(const GrassmannianPermutation&, const GrassmannianPermutation&) = default;

 private:
  std::vector<std::uint32_t> one_line_;
  std::size_t descent_position_;
};

/// sum_k k * a_k
std::uint64_t weight_of(std::span<const std::uint32_t> exponents);

/// Partition with a_i parts equal to i.
Partition alpha_partition(std::span<const std::uint32_t> exponents);

/// lambda*_k = a_k + ... + a_d.
BetaVector beta_partition(std::span<const std::uint32_t> exponents);

/// a_i = b_i - b_{i+1}, a_d = b_d.
std::vector<std::uint32_t> exponent_from_beta(const BetaVector& beta);

TriangularMatrix triangular_matrix(std::span<const std::uint32_t> exponents);

/// lambda'_j = #{i : lambda_i >= j}
Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);

/// w_i = i + b_{d+1-i} for i <= d, then the unused values in increasing order.
/// Throws PartitionTooWide when b_1 > n - d.
GrassmannianPermutation grassmannian_permutation(const BetaVector& beta, std::size_t n);

/// c_i = #{j > i : w_i > w_j}. Throws NotAPermutation.
std::vector<std::uint32_t> permutation_code(std::span<const std::uint32_t> one_line);

/// Inversion count. Throws NotAPermutation.
std::uint64_t permutation_length(std::span<const std::uint32_t> one_line);

/// Weakly decreasing d-vectors with entries in [0, r], lexicographic order.
std::vector<BetaVector> enumerate_box_partitions(std::size_t d, std::size_t r);

/// [d + r choose d]_t as the exact quotient
/// prod_{i<=d+r} (1 - t^i) / (prod_{i<=d} (1 - t^i) * prod_{i<=r} (1 - t^i)).
Polynomial gaussian_binomial(std::size_t d, std::size_t r);

/// sum of t^{|lambda|} over the partitions in the r x d box, by enumeration.
Polynomial poincare_polynomial(std::size_t d, std::size_t r);

}  // namespace sgr
