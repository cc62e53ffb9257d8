#include <random>

#include <gtest/gtest.h>

#include "sgr/errors.hpp"
#include "sgr/oracle.hpp"
#include "sgr/simplex.hpp"

namespace sgr {
namespace {

using Word = std::vector<std::uint32_t>;

Polynomial P(std::initializer_list<int> c) {
  std::vector<BigInt> v;
  for (int x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

std::vector<Word> words(const std::vector<LatticePoint>& pts) {
  std::vector<Word> out;
  for (const auto& p : pts) out.emplace_back(p.coords().begin(), p.coords().end());
  return out;
}

TEST(DilatedSimplex, RejectsZeroDimension) { EXPECT_THROW(DilatedSimplex(0, 3), InvalidArgument); }

TEST(LatticePoint, ValidatedConstruction) {
  const DilatedSimplex s(3, 2);
  EXPECT_NO_THROW(LatticePoint::in(s, {1, 0, 1}));
  EXPECT_THROW(LatticePoint::in(s, {1, 1}), DimensionMismatch);
  EXPECT_THROW(LatticePoint::in(s, {1, 1, 1}), InvalidArgument);
}

TEST(LatticePoint, LexicographicOrder) {
  EXPECT_LT(LatticePoint({0, 2}), LatticePoint({1, 0}));
  EXPECT_LT(LatticePoint({1, 0}), LatticePoint({1, 1}));
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(words(enumerate_lattice_points(DilatedSimplex(1, 2))), (std::vector<Word>{{0}, {1}, {2}}));
  EXPECT_EQ(words(enumerate_lattice_points(DilatedSimplex(3, 1))),
            (std::vector<Word>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(enumerate_lattice_points(DilatedSimplex(3, 4)).size(), 35u);
}

TEST(Enumerate, MatchesFilteredCube) {
  for (std::size_t d = 1; d <= 5; ++d) {
    for (std::size_t r = 0; r <= 5; ++r) {
      ASSERT_EQ(words(enumerate_lattice_points(DilatedSimplex(d, r))), oracle::simplex_points(d, r)) << d << "," << r;
    }
  }
}

TEST(Count, Examples) {
  EXPECT_EQ(count_lattice_points(DilatedSimplex(3, 3)), 20);
  EXPECT_EQ(count_lattice_points(DilatedSimplex(7, 0)), 1);
  EXPECT_EQ(count_lattice_points(DilatedSimplex(2, 2)), 6);
  EXPECT_EQ(count_lattice_points(DilatedSimplex(50, 50)), BigInt("100891344545564193334812497256"));
}

TEST(Slices, Examples) {
  auto sizes = [](const std::vector<SliceClass>& classes) {
    std::vector<std::size_t> out;
    for (const auto& c : classes) out.push_back(c.points.size());
    return out;
  };
  const auto a = slice_classes(DilatedSimplex(3, 4), WeightVector::ones(3));
  EXPECT_EQ(sizes(a), (std::vector<std::size_t>{1, 3, 6, 10, 15}));
  const auto b = slice_classes(DilatedSimplex(2, 2), WeightVector({1, 2}));
  EXPECT_EQ(sizes(b), (std::vector<std::size_t>{1, 1, 2, 1, 1}));
  for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(b[k].level, k);
  const auto c = slice_classes(DilatedSimplex(1, 0), WeightVector({5}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].level, 0u);
  EXPECT_EQ(c[0].points, std::vector<LatticePoint>{LatticePoint({0})});
}

TEST(Slices, EmptyLevelsKept) {
  const auto c = slice_classes(DilatedSimplex(1, 2), WeightVector({3}));
  ASSERT_EQ(c.size(), 7u);
  EXPECT_EQ(c[1].points.size(), 0u);
  EXPECT_EQ(c[3].points.size(), 1u);
}

TEST(Slices, DimensionMismatch) {
  EXPECT_THROW(slice_counts(DilatedSimplex(3, 2), WeightVector::ones(2)), DimensionMismatch);
  EXPECT_THROW(slice_classes(DilatedSimplex(3, 2), WeightVector::ones(4)), DimensionMismatch);
  EXPECT_THROW(weighted_polynomial(DilatedSimplex(3, 2), WeightVector::ones(1)), DimensionMismatch);
}

TEST(Slices, CountsMatchBruteForceGrading) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint32_t> wdist(1, 4);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t r = 0; r <= 5; ++r) {
      std::vector<std::uint32_t> w(d);
      for (auto& x : w) x = wdist(rng);
      ASSERT_EQ(slice_counts(DilatedSimplex(d, r), WeightVector(w)), oracle::grade(d, r, w));
    }
  }
}

TEST(WeightVector, Validation) {
  EXPECT_THROW(WeightVector({}), InvalidArgument);
  EXPECT_THROW(WeightVector({1, 0}), InvalidArgument);
  EXPECT_EQ(WeightVector::staircase(3), WeightVector({1, 2, 3}));
  EXPECT_EQ(WeightVector({2, 5}).max_level(3), 15u);
}

TEST(DilationPolynomial, Examples) {
  EXPECT_EQ(dilation_polynomial(DilatedSimplex(3, 4)), P({1, 3, 6, 10, 15}));
  EXPECT_EQ(dilation_polynomial(DilatedSimplex(3, 3)), P({1, 3, 6, 10}));
  EXPECT_EQ(dilation_polynomial(DilatedSimplex(5, 0)), P({1}));
}

TEST(DilationPolynomial, LargeCoefficients) {
  const auto p = dilation_polynomial(DilatedSimplex(30, 40));
  EXPECT_EQ(p.coeff(40), BigInt("23720460024918645912"));
  EXPECT_EQ(p.coefficient_sum(), binomial(70, 30));
}

TEST(WeightedPolynomial, Examples) {
  EXPECT_EQ(weighted_polynomial(DilatedSimplex(2, 2), WeightVector({1, 2})), P({1, 1, 2, 1, 1}));
  EXPECT_EQ(weighted_polynomial(DilatedSimplex(1, 3), WeightVector({1})), P({1, 1, 1, 1}));
  EXPECT_EQ(weighted_polynomial(DilatedSimplex(2, 1), WeightVector({1, 2})), P({1, 1, 1}));
}

TEST(GeneratingSeries, Ehrhart) {
  EXPECT_EQ(ehrhart_generating_series(1, 3), P({1, 2, 3, 4}));
  EXPECT_EQ(ehrhart_generating_series(3, 2), P({1, 4, 10}));
  for (std::size_t d = 1; d <= 6; ++d) EXPECT_EQ(ehrhart_generating_series(d, 4).coeff(0), 1);
}

TEST(GeneratingSeries, Dilation) {
  const auto s = dilation_generating_series(3, 3, 3);
  EXPECT_EQ(s.z_coefficient(3), P({1, 3, 6, 10}));
  EXPECT_EQ(s.z_coefficient(0), P({1}));
  const auto line = dilation_generating_series(1, 5, 5);
  for (std::size_t r = 0; r <= 5; ++r) {
    std::vector<BigInt> ones(r + 1, 1);
    EXPECT_EQ(line.z_coefficient(r), Polynomial(ones));
  }
}

}  // namespace
}  // namespace sgr
