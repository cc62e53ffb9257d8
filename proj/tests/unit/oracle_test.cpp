#include <gtest/gtest.h>

#include "sgr/oracle.hpp"

namespace sgr::oracle {
namespace {

Coeffs C(std::initializer_list<int> c) { return {c.begin(), c.end()}; }

TEST(Oracle, PascalBinomial) {
  EXPECT_EQ(pascal_binomial(60, 20), BigInt("4191844505805495"));
  EXPECT_EQ(pascal_binomial(3, 5), 0);
}

TEST(Oracle, SimplexPoints) {
  EXPECT_EQ(simplex_points(2, 2), (std::vector<Word>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
  EXPECT_EQ(simplex_points(4, 0), (std::vector<Word>{{0, 0, 0, 0}}));
}

TEST(Oracle, Grade) {
  const std::vector<std::uint32_t> w = {1, 2};
  EXPECT_EQ(grade(2, 2, w), C({1, 1, 2, 1, 1}));
}

TEST(Oracle, RowTableauxAndBoxes) {
  EXPECT_EQ(row_tableaux(2, 2), (std::vector<Word>{{}, {1}, {2}, {1, 1}, {1, 2}, {2, 2}}));
  EXPECT_EQ(box_partitions(2, 1), (std::vector<Word>{{0, 0}, {1, 0}, {1, 1}}));
}

TEST(Oracle, QPascal) {
  EXPECT_EQ(q_binomial_pascal(2, 2), C({1, 1, 2, 1, 1}));
  EXPECT_EQ(q_binomial_pascal(3, 0), C({1}));
  const auto big = q_binomial_pascal(5, 6);
  EXPECT_EQ(big.size(), 31u);
  EXPECT_EQ(Coeffs(big.begin(), big.begin() + 5), C({1, 1, 2, 3, 5}));
}

TEST(Oracle, TransposeAndInversions) {
  const std::vector<std::uint32_t> parts = {3, 1};
  EXPECT_EQ(transpose_diagram(parts), (Word{2, 1, 1}));
  const std::vector<std::uint32_t> w = {3, 1, 5, 4, 2, 6};
  EXPECT_EQ(inversion_pairs(w), 5u);
}

TEST(Oracle, Determinant) {
  EXPECT_EQ(determinant({{BigInt(2), BigInt(1)}, {BigInt(7), BigInt(4)}}), 1);
  EXPECT_EQ(determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}), -1);
  EXPECT_EQ(determinant({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}), 0);
}

TEST(Oracle, CharacterForms) {
  const std::vector<BigInt> x = {2, 3, 5};
  EXPECT_EQ(character_tableau_sum(3, 3, x), 490);
  EXPECT_EQ(character_bialternant(3, 3, x), 490);
}

TEST(Oracle, Trim) { EXPECT_EQ(trim(C({1, 0, 0})), C({1})); }

}  // namespace
}  // namespace sgr::oracle
