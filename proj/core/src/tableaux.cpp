#include "sgr/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgr/errors.hpp"

namespace sgr {

RowTableau::RowTableau(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
  if (std::find(entries_.begin(), entries_.end(), 0u) != entries_.end()) {
    throw InvalidArgument("tableau entries start at 1");
  }
  if (!std::is_sorted(entries_.begin(), entries_.end())) {
    throw InvalidArgument("row tableau entries must weakly increase");
  }
}

std::strong_ordering operator<=>(const RowTableau& a, const RowTableau& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.entries_ <=> b.entries_;
}

std::uint64_t Monomial::total_degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

std::vector<RowTableau> enumerate_row_tableaux(std::size_t d, std::size_t r) {
  if (d == 0) throw InvalidArgument("d must be at least 1");
  std::vector<RowTableau> out;
  out.emplace_back();
  std::vector<std::uint32_t> word;
  for (std::size_t k = 1; k <= r; ++k) {
    // Weakly increasing words of length k in lexicographic order: start at
    // 1...1 and bump the rightmost entry that is below d.
    word.assign(k, 1);
    while (true) {
      out.emplace_back(word);
      std::size_t i = k;
      while (i > 0 && word[i - 1] == d) --i;
      if (i == 0) break;
      const std::uint32_t next = word[i - 1] + 1;
      std::fill(word.begin() + static_cast<std::ptrdiff_t>(i) - 1, word.end(), next);
    }
  }
  return out;
}

LatticePoint tableau_to_point(const RowTableau& tableau, std::size_t d) {
  std::vector<std::uint32_t> v(d, 0);
  for (std::uint32_t e : tableau.entries()) {
    if (e > d) {
      throw EntryOutOfRange("tableau entry " + std::to_string(e) + " outside {1.." + std::to_string(d) + "}");
    }
    ++v[e - 1];
  }
  return LatticePoint(std::move(v));
}

RowTableau point_to_tableau(const LatticePoint& point) {
  std::vector<std::uint32_t> word;
  word.reserve(point.sum());
  for (std::size_t j = 0; j < point.size(); ++j) word.insert(word.end(), point[j], static_cast<std::uint32_t>(j + 1));
  return RowTableau(std::move(word));
}

BigInt count_ssyt_row(std::size_t d, std::size_t k) {
  if (d == 0) throw InvalidArgument("d must be at least 1");
  // lambda = (k, 0, ..., 0) with d parts.
  auto part = [k](std::size_t i) -> BigInt { return i == 1 ? BigInt(k) : BigInt(0); };
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = i + 1; j <= d; ++j) {
      num *= part(i) - part(j) + BigInt(j - i);
      den *= BigInt(j - i);
    }
  }
  BigInt q;
  BigInt rem;
  divide_qr(num, den, q, rem);
  if (rem != 0) throw NonExactDivision("hook-content product is not integral");
  return q;
}

Polynomial semistandard_polynomial(std::size_t d, std::size_t r) {
  std::vector<BigInt> c(r + 1);
  for (const auto& t : enumerate_row_tableaux(d, r)) ++c[t.length()];
  return Polynomial(std::move(c));
}

std::vector<Monomial> grassmannian_monomials(std::size_t d, std::size_t r) {
  auto tableaux = enumerate_row_tableaux(d, r);
  std::vector<Monomial> out;
  out.reserve(tableaux.size());
  for (const auto& t : tableaux) {
    auto p = tableau_to_point(t, d);
    out.emplace_back(std::vector<std::uint32_t>(p.coords().begin(), p.coords().end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t minimal_grassmannian_index(const Monomial& m) { return m.total_degree(); }

bool is_grassmannian_member(const Monomial& m, std::size_t d, std::size_t r) {
  return m.num_vars() == d && m.total_degree() <= r;
}

BigInt character_evaluate(std::size_t d, std::size_t r, std::span<const BigInt> values) {
  if (values.size() != d) {
    throw DimensionMismatch("expected " + std::to_string(d) + " values, got " + std::to_string(values.size()));
  }
  // h[k] holds h_k(x_1..x_j) after processing letter j:
  //   h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j * h_{k-1}(x_1..x_j).
  std::vector<BigInt> h(r + 1, 0);
  h[0] = 1;
  for (const BigInt& x : values) {
    for (std::size_t k = 1; k <= r; ++k) h[k] += x * h[k - 1];
  }
  BigInt total = 0;
  for (const auto& v : h) total += v;
  return total;
}

}  // namespace sgr
