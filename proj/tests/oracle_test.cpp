#include <gtest/gtest.h>

#include "oracles.hpp"
#include "simpcalc/constructions.hpp"
#include "simpcalc/simplicial_chains.hpp"

using namespace simpcalc;

TEST(Oracle, DeterminantByHand) {
  EXPECT_EQ(oracle::determinant(IntMatrix(2, 2, {1, 2, 3, 4})), -2);
  EXPECT_EQ(oracle::determinant(IntMatrix(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 2})), 6);
  EXPECT_EQ(oracle::determinant(IntMatrix(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 1})), 0);
  EXPECT_EQ(oracle::determinant(IntMatrix(0, 0)), 1);
}

TEST(Oracle, InvariantFactorsByHand) {
  EXPECT_EQ(oracle::invariant_factors(IntMatrix(2, 2, {2, 0, 0, 3})), (IntVector{1, 6}));
  EXPECT_EQ(oracle::invariant_factors(IntMatrix(2, 3, {2, 4, 6, 4, 8, 12})), (IntVector{2}));
  EXPECT_TRUE(oracle::invariant_factors(IntMatrix(2, 2)).empty());
}

TEST(Oracle, PosetCountsUpToIsomorphism) {
  // 1, 2, 5 and 16 unlabelled posets on 1..4 elements.
  EXPECT_EQ(oracle::small_posets(1).size(), 1u);
  EXPECT_EQ(oracle::small_posets(2).size(), 3u);
  EXPECT_EQ(oracle::small_posets(3).size(), 8u);
  EXPECT_EQ(oracle::small_posets(4).size(), 24u);
}

TEST(Oracle, MapCountsByHand) {
  // Monotone maps [1] -> [n].
  EXPECT_EQ(oracle::count_maps(standard_simplex(1), standard_simplex(1)), 3u);
  EXPECT_EQ(oracle::count_maps(standard_simplex(1), standard_simplex(2)), 6u);
  // Monotone functions {0, 1, 2} -> {0, 1}.
  EXPECT_EQ(oracle::count_maps(boundary(2), standard_simplex(1)), 4u);
}

TEST(Oracle, HomologyOfCircle) {
  const auto c = normalized_chains(boundary(2));
  EXPECT_EQ(oracle::homology(c, 0), (HomologyGroup{1, {}}));
  EXPECT_EQ(oracle::homology(c, 1), (HomologyGroup{1, {}}));
}

TEST(Oracle, CorpusIsWellFormed) {
  for (const auto& name : oracle::corpus_names()) {
    const FiniteSSet x = oracle::corpus(name);
    EXPECT_GT(x.size(), 0u) << name;
  }
}

TEST(Oracle, RandomComplexesRespectBounds) {
  std::mt19937 rng(7);
  for (int k = 0; k < 30; ++k) {
    const ChainComplex c = oracle::random_complex(rng, 4, 3, 5);
    for (int n = 0; n <= 4; ++n) {
      EXPECT_LE(c.rank(n), 3u);
      const IntMatrix d = c.boundary(n);
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t col = 0; col < d.cols(); ++col) EXPECT_LE(abs(d(r, col)), 5);
    }
  }
}
