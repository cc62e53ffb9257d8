#include "sgr/grassmann.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgr/errors.hpp"

namespace sgr {

namespace {

bool weakly_decreasing(const std::vector<std::uint32_t>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

}  // namespace

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (!weakly_decreasing(parts_)) throw NotWeaklyDecreasing("partition parts must weakly decrease");
  if (!parts_.empty() && parts_.back() == 0) throw InvalidArgument("partition parts must be positive");
}

std::uint64_t Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

BetaVector::BetaVector(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
  if (!weakly_decreasing(entries_)) throw NotWeaklyDecreasing("beta vector entries must weakly decrease");
}

std::uint64_t BetaVector::size() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

Partition BetaVector::to_partition() const {
  std::vector<std::uint32_t> parts(entries_.begin(), std::find(entries_.begin(), entries_.end(), 0u));
  return Partition(std::move(parts));
}

std::uint32_t TriangularMatrix::entry(std::size_t row, std::size_t col) const {
  if (row >= dim() || col >= dim()) throw InvalidArgument("matrix index out of range");
  return row <= col ? exponents_[col] : 0;
}

std::uint64_t TriangularMatrix::row_sum(std::size_t row) const {
  std::uint64_t acc = 0;
  for (std::size_t col = 0; col < dim(); ++col) acc += entry(row, col);
  return acc;
}

std::uint64_t TriangularMatrix::column_sum(std::size_t col) const {
  std::uint64_t acc = 0;
  for (std::size_t row = 0; row < dim(); ++row) acc += entry(row, col);
  return acc;
}

std::vector<std::size_t> GrassmannianPermutation::descents() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < one_line_.size(); ++i) {
    if (one_line_[i] > one_line_[i + 1]) out.push_back(i + 1);
  }
  return out;
}

std::uint64_t weight_of(std::span<const std::uint32_t> exponents) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) acc += (k + 1) * std::uint64_t{exponents[k]};
  return acc;
}

Partition alpha_partition(std::span<const std::uint32_t> exponents) {
  std::vector<std::uint32_t> parts;
  for (std::size_t i = exponents.size(); i > 0; --i) {
    parts.insert(parts.end(), exponents[i - 1], static_cast<std::uint32_t>(i));
  }
  return Partition(std::move(parts));
}

BetaVector beta_partition(std::span<const std::uint32_t> exponents) {
  std::vector<std::uint32_t> beta(exponents.size());
  std::uint32_t suffix = 0;
  for (std::size_t k = exponents.size(); k-- > 0;) {
    suffix += exponents[k];
    beta[k] = suffix;
  }
  return BetaVector(std::move(beta));
}

std::vector<std::uint32_t> exponent_from_beta(const BetaVector& beta) {
  const auto b = beta.entries();
  std::vector<std::uint32_t> a(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = b[i] - (i + 1 < b.size() ? b[i + 1] : 0u);
  return a;
}

TriangularMatrix triangular_matrix(std::span<const std::uint32_t> exponents) {
  return TriangularMatrix(std::vector<std::uint32_t>(exponents.begin(), exponents.end()));
}

Partition conjugate(const Partition& p) {
  const auto parts = p.parts();
  if (parts.empty()) return {};
  std::vector<std::uint32_t> out(parts.front(), 0);
  for (std::uint32_t part : parts) {
    for (std::uint32_t j = 0; j < part; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

GrassmannianPermutation grassmannian_permutation(const BetaVector& beta, std::size_t n) {
  const std::size_t d = beta.dim();
  if (d > n) throw InvalidArgument("beta vector longer than n");
  if (beta.width() > n - d) {
    throw PartitionTooWide("part " + std::to_string(beta.width()) + " does not fit in width " + std::to_string(n - d));
  }
  const auto b = beta.entries();
  std::vector<std::uint32_t> w;
  w.reserve(n);
  std::vector<bool> used(n + 1, false);
  for (std::size_t i = 1; i <= d; ++i) {
    const auto value = static_cast<std::uint32_t>(i + b[d - i]);
    w.push_back(value);
    used[value] = true;
  }
  for (std::uint32_t v = 1; v <= n; ++v) {
    if (!used[v]) w.push_back(v);
  }
  return GrassmannianPermutation(std::move(w), d);
}

std::vector<std::uint32_t> permutation_code(std::span<const std::uint32_t> one_line) {
  const std::size_t n = one_line.size();
  std::vector<bool> seen(n + 1, false);
  for (std::uint32_t v : one_line) {
    if (v == 0 || v > n || seen[v]) throw NotAPermutation("one-line word is not a permutation of {1.." + std::to_string(n) + "}");
    seen[v] = true;
  }
  std::vector<std::uint32_t> code(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (one_line[i] > one_line[j]) ++code[i];
    }
  }
  return code;
}

std::uint64_t permutation_length(std::span<const std::uint32_t> one_line) {
  const auto code = permutation_code(one_line);
  return std::accumulate(code.begin(), code.end(), std::uint64_t{0});
}

std::vector<BetaVector> enumerate_box_partitions(std::size_t d, std::size_t r) {
  std::vector<BetaVector> out;
  if (d == 0) return out;
  // Lexicographic walk over weakly decreasing words: bump the rightmost entry
  // that stays <= its left neighbour (or r for the first), zero the tail.
  std::vector<std::uint32_t> b(d, 0);
  while (true) {
    out.emplace_back(b);
    std::size_t i = d;
    while (i > 0) {
      const std::uint32_t cap = i == 1 ? static_cast<std::uint32_t>(r) : b[i - 2];
      if (b[i - 1] < cap) break;
      --i;
    }
    if (i == 0) break;
    ++b[i - 1];
    std::fill(b.begin() + static_cast<std::ptrdiff_t>(i), b.end(), 0u);
  }
  return out;
}

Polynomial gaussian_binomial(std::size_t d, std::size_t r) {
  auto falling = [](std::size_t m) {
    Polynomial acc = Polynomial::constant(1);
    for (std::size_t i = 1; i <= m; ++i) acc *= Polynomial::one_minus_power(i);
    return acc;
  };
  return poly_div_exact(falling(d + r), falling(d) * falling(r));
}

Polynomial poincare_polynomial(std::size_t d, std::size_t r) {
  std::vector<BigInt> c(d * r + 1);
  for (const auto& beta : enumerate_box_partitions(d, r)) ++c[beta.size()];
  return Polynomial(std::move(c));
}

}  // namespace sgr
