#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "simpcalc/constructions.hpp"
#include "simpcalc/error.hpp"
#include "simpcalc/excision.hpp"
#include "simpcalc/homology.hpp"
#include "simpcalc/simplicial_chains.hpp"
#include "simpcalc/tower.hpp"

using namespace simpcalc;

namespace {

std::vector<FiniteSSet> test_spaces() {
  return {boundary(1).with_basepoint(0), oracle::corpus("circle"), boundary(2).with_basepoint(0),
          oracle::corpus("sphere2")};
}

}  // namespace

TEST(Tower, SuspensionShiftsReducedHomology) {
  for (const FiniteSSet& x : test_spaces()) {
    const ChainComplex c = reduced_normalized_chains(x);
    const ChainComplex s = reduced_normalized_chains(reduced_suspension(x));
    for (int k = 0; k <= 2; ++k) EXPECT_EQ(homology(s, k + 1), homology(c, k)) << k;
    EXPECT_TRUE(homology(s, 0).is_zero());
  }
}

TEST(Tower, ComparisonMapIsQuasiIso) {
  for (const FiniteSSet& x : test_spaces()) {
    const Suspension s = reduced_suspension_data(x);
    const ChainMap f = suspension_comparison(s);
    EXPECT_EQ(f.source(), reduced_normalized_chains(x));
    EXPECT_TRUE(quasi_iso(f));
  }
}

TEST(Tower, CacheSharesIterates) {
  SuspensionCache cache;
  const FiniteSSet x = boundary(2).with_basepoint(0);
  EXPECT_EQ(cache.iterate(x, 0), x);
  EXPECT_EQ(cache.iterate(x, 2), reduced_suspension(reduced_suspension(x)));
  EXPECT_EQ(cache.step(x, 2).space, cache.iterate(x, 2));
  std::vector<std::thread> threads;
  std::vector<FiniteSSet> results(4);
  for (std::size_t t = 0; t < results.size(); ++t)
    threads.emplace_back([&, t] { results[t] = cache.iterate(x, 2); });
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, cache.iterate(x, 2));
}

TEST(Tower, ChainsTowerIsConstant) {
  for (const FiniteSSet& x : test_spaces()) {
    const TowerReport r = tower_report(reduced_chains_evaluator(), x, 3, 2);
    for (std::size_t n = 1; n < r.stage_homology.size(); ++n) EXPECT_EQ(r.stage_homology[n], r.stage_homology[0]);
    for (bool q : r.map_is_quasi_iso) EXPECT_TRUE(q);
    ASSERT_TRUE(r.colimit.has_value());
    EXPECT_EQ(r.colimit_homology, r.stage_homology[0]);
  }
}

TEST(Tower, MockApproximationVanishes) {
  for (const FiniteSSet& x : test_spaces()) {
    const ColimitResult c = p1_approximation(l1_mock_evaluator(), x, 4);
    EXPECT_TRUE(c.value.is_zero());
    EXPECT_EQ(c.kind, Stabilization::zero_tail);
  }
}

TEST(Tower, UnreducedTowerDoesNotStabilize) {
  EXPECT_THROW(p1_approximation(unreduced_chains_evaluator(), boundary(1).with_basepoint(0), 3), NoStabilization);
  const TowerReport r = tower_report(unreduced_chains_evaluator(), boundary(1).with_basepoint(0), 3, 1);
  EXPECT_FALSE(r.colimit.has_value());
  EXPECT_FALSE(r.failure.empty());
}

TEST(Tower, Reducedness) {
  EXPECT_TRUE(check_reduced(reduced_chains_evaluator(), 2).reduced);
  EXPECT_TRUE(check_reduced(l1_mock_evaluator(), 2).reduced);
  const auto u = check_reduced(unreduced_chains_evaluator(), 2);
  EXPECT_FALSE(u.reduced);
  ASSERT_FALSE(u.witness.empty());
  bool nonzero = false;
  for (const auto& g : u.witness[0]) nonzero = nonzero || !g.is_zero();
  EXPECT_TRUE(nonzero);
}

TEST(Tower, StagesNeedPointedSpaces) {
  EXPECT_THROW(stage(reduced_chains_evaluator(), boundary(2), 1), InvalidArgument);
  EXPECT_THROW(tower(reduced_chains_evaluator(), point(), 0), InvalidArgument);
}
