#include <random>

#include <gtest/gtest.h>

#include "eqmodel/linalg.hpp"

using namespace eqmodel;

namespace {

Matrix random_matrix(std::mt19937 &rng, std::size_t r, std::size_t c, int density = 2)
{
  std::uniform_int_distribution<int> v(-3, 3), keep(0, density);
  std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(c));
  for (auto &row : rows)
    for (auto &x : row)
      if (keep(rng) == 0)
        x = v(rng);
  return Matrix::from_dense(rows);
}

}  // namespace

TEST(LinalgTest, RationalText)
{
  EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(LinalgTest, KernelIsAnnihilatedAndRankNullity)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial * 3) % 6;
    Matrix a = random_matrix(rng, r, c);
    Matrix k = kernel(a);
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(rank(a) + k.cols(), c);
    EXPECT_EQ(rank(a), rank(a.transpose()));
  }
}

TEST(LinalgTest, InverseAndSolve)
{
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 20) {
    Matrix a = random_matrix(rng, 4, 4, 1);
    if (rank(a) < 4)
      continue;
    ++tested;
    EXPECT_TRUE((a * inverse(a)).is_identity());
    SparseVec b = SparseVec::from_dense({1, Rational(1, 3), 0, -2});
    auto x = solve(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a.apply(*x), b);
  }
}

TEST(LinalgTest, SolveReportsInconsistency)
{
  Matrix a = Matrix::from_dense({{1, 0}, {0, 0}});
  EXPECT_FALSE(solve(a, SparseVec::unit(1)).has_value());
}

TEST(LinalgTest, CokernelOfSpan)
{
  // Q^3 / <e0 - e1>
  SparseVec rel = SparseVec::unit(0) - SparseVec::unit(1);
  Cokernel q = cokernel_of_span(3, {rel});
  EXPECT_EQ(q.quotient.rows(), 2u);
  EXPECT_TRUE(q.quotient.apply(rel).empty());
  EXPECT_EQ(q.quotient.apply(SparseVec::unit(0)), q.quotient.apply(SparseVec::unit(1)));
  EXPECT_TRUE((q.quotient * q.section).is_identity());
}

TEST(LinalgTest, KroneckerShape)
{
  Matrix a = Matrix::from_dense({{1, 2}, {3, 4}});
  Matrix k = kron(Matrix::identity(2), a);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k.at(3, 2), Rational(3));
  EXPECT_EQ(k.at(0, 2), Rational(0));
}
