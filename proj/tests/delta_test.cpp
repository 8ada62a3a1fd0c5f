#include <gtest/gtest.h>

#include <algorithm>

#include "simpcalc/delta.hpp"

using namespace simpcalc;

TEST(Delta, CofaceSkipsOneValue) {
  EXPECT_EQ(MonotoneMap::coface(2, 1).values(), (std::vector<int>{0, 2}));
  EXPECT_EQ(MonotoneMap::codegeneracy(1, 0).values(), (std::vector<int>{0, 0, 1}));
}

TEST(Delta, CosimplicialIdentities) {
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= n + 1; ++j)
      for (int i = 0; i < j; ++i)
        EXPECT_EQ(compose(MonotoneMap::coface(n + 1, j), MonotoneMap::coface(n, i)),
                  compose(MonotoneMap::coface(n + 1, i), MonotoneMap::coface(n, j - 1)));
  using M = MonotoneMap;
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i <= n; ++i) {
        const M lhs = compose(M::codegeneracy(n - 1, j), M::coface(n, i));
        if (i == j || i == j + 1)
          EXPECT_TRUE(lhs.is_identity());
        else if (i < j)
          EXPECT_EQ(lhs, compose(M::coface(n - 1, i), M::codegeneracy(n - 2, j - 1)));
        else
          EXPECT_EQ(lhs, compose(M::coface(n - 1, i - 1), M::codegeneracy(n - 2, j)));
      }
}

TEST(Delta, EpiMonoFactorizationIsUnique) {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const MonotoneMap& f : monotone_maps(n, m)) {
        const auto em = epi_mono_factor(f);
        EXPECT_TRUE(em.epi.is_surjective());
        EXPECT_TRUE(em.mono.is_injective());
        EXPECT_EQ(compose(em.mono, em.epi), f);
      }
}

TEST(Delta, CountsAreBinomial) {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      EXPECT_EQ(static_cast<long long>(monotone_maps(n, m).size()), binomial(n + m + 1, n + 1));
      EXPECT_EQ(static_cast<long long>(injections(n, m).size()), binomial(m + 1, n + 1));
      EXPECT_EQ(static_cast<long long>(surjections(n, m).size()), binomial(n, m));
    }
}

TEST(Delta, DegeneracyWordsRoundTrip) {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= n; ++m)
      for (const MonotoneMap& s : surjections(n, m)) {
        const auto word = degeneracy_word(s);
        EXPECT_TRUE(std::is_sorted(word.rbegin(), word.rend()));
        EXPECT_EQ(surjection_from_word(n, word), s);
      }
}

TEST(Delta, RejectsNonMonotone) { EXPECT_ANY_THROW(MonotoneMap(2, {1, 0})); }
