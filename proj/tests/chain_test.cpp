#include <gtest/gtest.h>

#include "oracles.hpp"
#include "simpcalc/chain_complex.hpp"
#include "simpcalc/constructions.hpp"
#include "simpcalc/error.hpp"
#include "simpcalc/simplicial_chains.hpp"
#include "simpcalc/smith.hpp"

using namespace simpcalc;

namespace {

// 0 -> Z --k--> Z -> 0 in degrees 1, 0.
ChainComplex multiplication(long k) { return ChainComplex(0, {1, 1}, {IntMatrix(0, 1), IntMatrix(1, 1, {k})}); }

}  // namespace

TEST(Chain, RejectsNonzeroSquare) {
  EXPECT_THROW(ChainComplex(0, {1, 1, 1}, {IntMatrix(0, 1), IntMatrix(1, 1, {1}), IntMatrix(1, 1, {1})}),
               InvalidArgument);
  EXPECT_THROW(ChainComplex(0, {1, 2}, {IntMatrix(0, 1), IntMatrix(1, 1, {1})}), InvalidArgument);
}

TEST(Chain, ChainMapsMustCommute) {
  const ChainComplex c = multiplication(2);
  EXPECT_THROW(ChainMap(c, c, {{0, IntMatrix(1, 1, {1})}, {1, IntMatrix(1, 1, {2})}}), InvalidArgument);
  const ChainMap ok(c, c, {{0, IntMatrix(1, 1, {3})}, {1, IntMatrix(1, 1, {3})}});
  EXPECT_EQ(compose(ok, ok).block(0), IntMatrix(1, 1, {9}));
}

TEST(Chain, ConeOfIdentityIsAcyclic) {
  std::mt19937 rng(5);
  for (int k = 0; k < 20; ++k) {
    const ChainComplex c = oracle::random_complex(rng, 3, 3, 5);
    EXPECT_TRUE(quasi_iso(ChainMap::identity(c)));
    EXPECT_TRUE(is_acyclic(mapping_cone(ChainMap::identity(c))));
    EXPECT_TRUE(is_isomorphism(ChainMap::identity(c)));
  }
}

TEST(Chain, MultiplicationIsNotAQuasiIso) {
  const ChainComplex z = ChainComplex::concentrated(0);
  EXPECT_FALSE(quasi_iso(ChainMap(z, z, {{0, IntMatrix(1, 1, {2})}})));
  EXPECT_TRUE(quasi_iso(ChainMap(z, z, {{0, IntMatrix(1, 1, {-1})}})));
  EXPECT_FALSE(is_acyclic(multiplication(2)));
  EXPECT_TRUE(is_acyclic(multiplication(-1)));
}

TEST(Chain, LoopShiftMovesDegrees) {
  const ChainComplex c = normalized_chains(boundary(2));
  const ChainComplex o = loop_shift(c, 1);
  EXPECT_EQ(o.low(), -1);
  EXPECT_EQ(o.rank(-1), c.rank(0));
  EXPECT_EQ(o.boundary(0), c.boundary(1));
}

TEST(Chain, SumsAndProjections) {
  const ChainComplex a = multiplication(2), b = normalized_chains(standard_simplex(1));
  const ChainComplex s = direct_sum(a, b);
  EXPECT_EQ(compose(first_projection(a, b), first_inclusion(a, b)), ChainMap::identity(a));
  EXPECT_TRUE(compose(second_projection(a, b), first_inclusion(a, b)).is_zero());
  EXPECT_EQ(map_into_sum(first_projection(a, b), second_projection(a, b)), ChainMap::identity(s));
}

TEST(Chain, ExactSequenceChecks) {
  const ChainComplex z = ChainComplex::concentrated(0);
  const ChainComplex z2 = ChainComplex::concentrated(0, 2);
  const ChainMap in(z, z2, {{0, IntMatrix(2, 1, {1, 0})}});
  const ChainMap out(z2, z, {{0, IntMatrix(1, 2, {0, 1})}});
  EXPECT_TRUE(check_exact_sequence({in, out}, 0, 0).all_exact());
  const ChainMap twice(z, z2, {{0, IntMatrix(2, 1, {2, 0})}});
  EXPECT_FALSE(check_exact_sequence({twice, out}, 0, 0).exact_at(1));
  const ChainMap wrong(z2, z, {{0, IntMatrix(1, 2, {1, 0})}});
  EXPECT_THROW(check_exact_sequence({in, wrong}, 0, 0), NonZeroComposite);
}

TEST(Chain, InclusionsInduceSplitInjections) {
  for (const auto& [sub, whole] : std::vector<std::pair<SimplicialSubset, FiniteSSet>>{
           {horn_subset(3, 1), standard_simplex(3)}, {boundary_subset(2), standard_simplex(2)}}) {
    const ChainMap f = chain_map(sub.inclusion());
    for (int n = f.low(); n <= f.high(); ++n)
      if (f.block(n).cols() > 0) EXPECT_TRUE(is_split_injective(f.block(n)));
  }
}

TEST(Chain, ReducedChainsDropBasepoint) {
  const FiniteSSet c = oracle::corpus("circle");
  EXPECT_EQ(reduced_normalized_chains(c).rank(0), 0u);
  EXPECT_THROW(reduced_normalized_chains(boundary(2)), InvalidArgument);
}

TEST(Chain, TowerColimits) {
  const ChainComplex z = ChainComplex::concentrated(0);
  const ChainMap id = ChainMap::identity(z);
  const Tower constant({z, z, z}, {id, id});
  const auto c = sequential_colimit(constant, 1);
  EXPECT_EQ(c.kind, Stabilization::isomorphisms);
  EXPECT_EQ(c.index, 0u);
  const ChainComplex zero;
  const Tower dying({z, zero, zero}, {ChainMap::zero(z, zero), ChainMap::identity(zero)});
  EXPECT_EQ(sequential_colimit(dying, 2).kind, Stabilization::zero_tail);
  const ChainMap doubling(z, z, {{0, IntMatrix(1, 1, {2})}});
  EXPECT_THROW(sequential_colimit(Tower({z, z, z}, {doubling, doubling}), 1), NoStabilization);
}

TEST(Chain, L1Norms) {
  EXPECT_DOUBLE_EQ(l1_norm(RealChain({{0, 1.5}, {3, -2.0}})), 3.5);
  EXPECT_THROW(RealChain({{1, 1.0}, {1, 2.0}}), InvalidArgument);
  EXPECT_EQ(boundary_operator_norm(normalized_chains(standard_simplex(2)), 2), 3);
}
