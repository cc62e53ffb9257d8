#pragma once

// Brute-force reference computations used by the test suites and by the
// `verify` harness. Nothing here calls into the main library: every routine
// takes the most literal route (filtering a full cube of candidates,
// Pascal's triangle, explicit determinants) so that agreement with the
// library is meaningful.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sgr/bigint.hpp"

namespace sgr::oracle {

using Word = std::vector<std::uint32_t>;
using Coeffs = std::vector<BigInt>;

/// C(n, k) read off Pascal's triangle.
BigInt pascal_binomial(std::size_t n, std::size_t k);

/// Vectors of [0, r]^d with coordinate sum <= r, sorted lexicographically.
std::vector<Word> simplex_points(std::size_t d, std::size_t r);

/// counts[m] = #{points of simplex_points(d, r) with w . x = m},
/// sized r * max(w) + 1.
Coeffs grade(std::size_t d, std::size_t r, std::span<const std::uint32_t> weights);

/// Weakly increasing words over {1..d} of every length 0..r, found by
/// filtering all words. Ordered by length, then lexicographically.
std::vector<Word> row_tableaux(std::size_t d, std::size_t r);

/// Weakly decreasing vectors of [0, r]^d, sorted lexicographically.
std::vector<Word> box_partitions(std::size_t d, std::size_t r);

/// [d + r choose d]_q from the q-Pascal rule
/// [n, k] = [n-1, k-1] + q^k [n-1, k].
Coeffs q_binomial_pascal(std::size_t d, std::size_t r);

/// Transpose of a Young diagram drawn as a 0/1 grid.
Word transpose_diagram(std::span<const std::uint32_t> parts);

/// #{(i, j) : i < j, w_i > w_j}
std::uint64_t inversion_pairs(std::span<const std::uint32_t> one_line);

/// sum over row_tableaux(d, r) of prod_j values[j]^{mult of j}.
BigInt character_tableau_sum(std::size_t d, std::size_t r, std::span<const BigInt> values);

/// sum_{k=0}^{r} det(x_i^{lambda_j + d - j}) / det(x_i^{d - j}) with lambda = (k).
/// Requires pairwise distinct values (the Vandermonde must not vanish).
BigInt character_bialternant(std::size_t d, std::size_t r, std::span<const BigInt> values);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// Drops trailing zeros.
Coeffs trim(Coeffs c);

}  // namespace sgr::oracle
