#include "sgr/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sgr::oracle {

namespace {

// Calls fn on every vector of [0, hi]^d, odometer style.
void for_each_in_cube(std::size_t d, std::uint32_t hi, const std::function<void(const Word&)>& fn) {
  Word v(d, 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < d && v[i] == hi) v[i++] = 0;
    if (i == d) return;
    ++v[i];
  }
}

std::uint64_t sum_of(const Word& v) {
  std::uint64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

}  // namespace

BigInt pascal_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<BigInt> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1);
    next[0] = 1;
    next[i] = 1;
    for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

std::vector<Word> simplex_points(std::size_t d, std::size_t r) {
  std::vector<Word> out;
  for_each_in_cube(d, static_cast<std::uint32_t>(r), [&](const Word& v) {
    if (sum_of(v) <= r) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Coeffs grade(std::size_t d, std::size_t r, std::span<const std::uint32_t> weights) {
  if (weights.size() != d) throw std::invalid_argument("oracle::grade: weight length != d");
  const std::uint32_t wmax = d == 0 ? 0 : *std::max_element(weights.begin(), weights.end());
  Coeffs counts(r * wmax + 1, 0);
  for (const auto& p : simplex_points(d, r)) {
    std::uint64_t level = 0;
    for (std::size_t i = 0; i < d; ++i) level += std::uint64_t{weights[i]} * p[i];
    counts[level] += 1;
  }
  return counts;
}

std::vector<Word> row_tableaux(std::size_t d, std::size_t r) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= r; ++k) {
    std::vector<Word> layer;
    if (k == 0) {
      layer.emplace_back();
    } else {
      for_each_in_cube(k, static_cast<std::uint32_t>(d - 1), [&](const Word& v) {
        Word word(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) word[i] = v[i] + 1;
        if (std::is_sorted(word.begin(), word.end())) layer.push_back(std::move(word));
      });
    }
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Word> box_partitions(std::size_t d, std::size_t r) {
  std::vector<Word> out;
  for_each_in_cube(d, static_cast<std::uint32_t>(r), [&](const Word& v) {
    if (std::is_sorted(v.begin(), v.end(), std::greater<>())) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Coeffs q_binomial_pascal(std::size_t d, std::size_t r) {
  const std::size_t n = d + r;
  // table[m][k] = [m choose k]_q for k <= d
  std::vector<std::vector<Coeffs>> table(n + 1, std::vector<Coeffs>(d + 1));
  for (std::size_t m = 0; m <= n; ++m) {
    table[m][0] = Coeffs{1};
    for (std::size_t k = 1; k <= std::min(m, d); ++k) {
      const Coeffs& a = table[m - 1][k - 1];
      const Coeffs& b = table[m - 1][k];  // empty when k > m - 1
      Coeffs c(std::max(a.size(), b.empty() ? 0 : b.size() + k), 0);
      for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
      for (std::size_t i = 0; i < b.size(); ++i) c[i + k] += b[i];
      table[m][k] = std::move(c);
    }
  }
  return trim(table[n][d]);
}

Word transpose_diagram(std::span<const std::uint32_t> parts) {
  const std::size_t rows = parts.size();
  const std::size_t cols = rows == 0 ? 0 : *std::max_element(parts.begin(), parts.end());
  std::vector<std::vector<bool>> grid(rows, std::vector<bool>(cols, false));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < parts[i]; ++j) grid[i][j] = true;
  }
  Word out;
  for (std::size_t j = 0; j < cols; ++j) {
    std::uint32_t height = 0;
    for (std::size_t i = 0; i < rows; ++i) height += grid[i][j] ? 1 : 0;
    if (height > 0) out.push_back(height);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::uint64_t inversion_pairs(std::span<const std::uint32_t> one_line) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < one_line.size(); ++i) {
    for (std::size_t j = i + 1; j < one_line.size(); ++j) count += one_line[i] > one_line[j] ? 1 : 0;
  }
  return count;
}

BigInt character_tableau_sum(std::size_t d, std::size_t r, std::span<const BigInt> values) {
  if (values.size() != d) throw std::invalid_argument("oracle::character_tableau_sum: values length != d");
  BigInt total = 0;
  for (const auto& word : row_tableaux(d, r)) {
    BigInt term = 1;
    for (auto letter : word) term *= values[letter - 1];
    total += term;
  }
  return total;
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt character_bialternant(std::size_t d, std::size_t r, std::span<const BigInt> values) {
  if (values.size() != d) throw std::invalid_argument("oracle::character_bialternant: values length != d");
  auto alternant = [&](std::span<const std::size_t> exps) {
    std::vector<std::vector<BigInt>> m(d, std::vector<BigInt>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m[i][j] = pow(values[i], static_cast<unsigned>(exps[j]));
    }
    return determinant(std::move(m));
  };
  std::vector<std::size_t> base(d);
  for (std::size_t j = 0; j < d; ++j) base[j] = d - 1 - j;
  const BigInt vandermonde = alternant(base);
  if (vandermonde == 0) throw std::invalid_argument("oracle::character_bialternant: values must be distinct");

  BigInt total = 0;
  for (std::size_t k = 0; k <= r; ++k) {
    std::vector<std::size_t> exps = base;
    exps[0] += k;
    const BigInt num = alternant(exps);
    if (num % vandermonde != 0) throw std::logic_error("oracle::character_bialternant: non-integral Schur value");
    total += num / vandermonde;
  }
  return total;
}

Coeffs trim(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace sgr::oracle
