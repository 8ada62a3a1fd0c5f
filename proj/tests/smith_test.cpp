#include <gtest/gtest.h>

#include "oracles.hpp"
#include "simpcalc/smith.hpp"

using namespace simpcalc;

namespace {

bool divisibility_chain(const IntVector& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] % v[i] != 0) return false;
  return true;
}

}  // namespace

TEST(Smith, KnownForm) {
  const IntMatrix m(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16});
  EXPECT_EQ(invariant_factors(m), (IntVector{2, 6, 12}));
  EXPECT_EQ(matrix_rank(m), 3u);
}

TEST(Smith, ZeroAndEmpty) {
  EXPECT_TRUE(invariant_factors(IntMatrix(3, 2)).empty());
  EXPECT_TRUE(invariant_factors(IntMatrix(0, 4)).empty());
  EXPECT_EQ(kernel_basis(IntMatrix(0, 3)).cols(), 3u);
}

TEST(Smith, RandomMatricesAgreeWithDeterminantalDivisors) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix m = oracle::random_matrix(rng, rows, cols, 6);
    const SmithDecomposition s = smith_normal_form(m);
    EXPECT_EQ(s.left * m * s.right, s.diagonal);
    EXPECT_TRUE(is_unimodular(s.left));
    EXPECT_TRUE(is_unimodular(s.right));
    EXPECT_EQ(s.left * s.left_inverse, IntMatrix::identity(rows));
    EXPECT_EQ(s.right * s.right_inverse, IntMatrix::identity(cols));
    EXPECT_EQ(s.invariant_factors(), oracle::invariant_factors(m)) << m;
    EXPECT_TRUE(divisibility_chain(s.invariant_factors()));
    EXPECT_EQ(s.rank, oracle::rank(m));
  }
}

TEST(Smith, DenseMatricesStayTractable) {
  std::mt19937 rng(99);
  for (std::size_t n = 6; n <= 14; ++n) {
    const IntMatrix m = oracle::random_matrix(rng, n, n + rng() % 3, 9);
    const SmithDecomposition s = smith_normal_form(m);
    EXPECT_EQ(s.left * m * s.right, s.diagonal) << n;
    EXPECT_EQ(s.left * s.left_inverse, IntMatrix::identity(m.rows()));
    EXPECT_EQ(s.right * s.right_inverse, IntMatrix::identity(m.cols()));
    EXPECT_TRUE(divisibility_chain(s.invariant_factors()));
    EXPECT_EQ(s.invariant_factors(), invariant_factors(m));
  }
  // Square cases small enough for cofactor expansion: the factors multiply to |det|.
  for (std::size_t n = 6; n <= 8; ++n) {
    const IntMatrix m = oracle::random_matrix(rng, n, n, 9);
    Integer product = 1;
    const IntVector f = invariant_factors(m);
    for (const Integer& x : f) product *= x;
    const Integer det = oracle::determinant(m);
    EXPECT_EQ(f.size() == n ? product : Integer(0), abs(det)) << m;
  }
}

TEST(Smith, KernelBasisIsSaturated) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = oracle::random_matrix(rng, 1 + rng() % 3, 2 + rng() % 4, 4);
    const IntMatrix k = kernel_basis(m);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(k.cols(), m.cols() - matrix_rank(m));
    if (k.cols() > 0) EXPECT_TRUE(is_split_injective(k));
  }
}

TEST(Smith, SolveFindsIntegerSolutionsOnly) {
  const IntMatrix a(2, 2, {2, 0, 0, 3});
  EXPECT_EQ(solve(a, IntVector{4, 9}), (IntVector{2, 3}));
  EXPECT_FALSE(solve(a, IntVector{1, 0}).has_value());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = oracle::random_matrix(rng, 3, 3, 4);
    const IntMatrix x = oracle::random_matrix(rng, 3, 1, 4);
    const auto y = solve(m, m * x);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(m * *y, m * x);
  }
}

TEST(Smith, SplitInjectivity) {
  EXPECT_TRUE(is_split_injective(IntMatrix(2, 1, {1, 0})));
  EXPECT_FALSE(is_split_injective(IntMatrix(2, 1, {2, 0})));
  EXPECT_FALSE(is_split_injective(IntMatrix(1, 2, {1, 0})));
  EXPECT_TRUE(is_split_injective(IntMatrix(3, 2, {1, 1, 0, 1, 0, 0})));
}
