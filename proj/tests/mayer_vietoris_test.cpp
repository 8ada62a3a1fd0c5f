#include <gtest/gtest.h>

#include "oracles.hpp"
#include "simpcalc/constructions.hpp"
#include "simpcalc/error.hpp"
#include "simpcalc/mayer_vietoris.hpp"
#include "simpcalc/nerve.hpp"
#include "simpcalc/simplicial_chains.hpp"

using namespace simpcalc;

namespace {

// Exactness at entry k from ranks alone: rank of the middle group equals
// rank(in) + rank(out) when every group is free.
bool rank_exact(const LongExactSequence& les, std::size_t k) {
  const std::size_t middle = les.entries[k].group.rank;
  const std::size_t in = k == 0 ? 0 : oracle::rank(les.maps[k - 1]);
  const std::size_t out = k < les.maps.size() ? oracle::rank(les.maps[k]) : 0;
  return middle == in + out;
}

}  // namespace

TEST(MayerVietoris, TwoArcCover) {
  const auto les = mayer_vietoris(two_arc_cover(), 2);
  EXPECT_TRUE(les.exact());
  ASSERT_EQ(les.entries.size(), les.maps.size() + 1);
  for (std::size_t k = 1; k < les.entries.size(); ++k) {
    if (!les.entries[k].group.torsion.empty()) continue;
    EXPECT_TRUE(rank_exact(les, k)) << k;
  }
  // H_1(X) = Z maps onto the kernel of H_0(W) -> H_0(U ⊕ V).
  std::size_t h1x = 0;
  for (std::size_t k = 0; k < les.entries.size(); ++k)
    if (les.entries[k].degree == 1 && les.entries[k].position == LesPosition::x) h1x = k;
  EXPECT_EQ(les.entries[h1x].group, (HomologyGroup{1, {}}));
  EXPECT_EQ(les.maps[h1x], IntMatrix(2, 1, {-1, 1}));
}

TEST(MayerVietoris, ContractibleCoversOfTriangle) {
  const FiniteSSet d2 = standard_simplex(2);
  const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> covers{
      {{"012"}, {"12"}}, {{"012"}, {"0"}}, {{"012"}, {"012"}}};
  for (const auto& [u, v] : covers) {
    const auto les = mayer_vietoris(CoverData::from_names(d2, u, v), 2);
    EXPECT_TRUE(les.exact());
    for (const auto& e : les.entries) {
      const std::size_t expected = e.degree != 0 ? 0 : e.position == LesPosition::sum ? 2 : 1;
      EXPECT_EQ(e.group, (HomologyGroup{expected, {}})) << e.degree << " " << to_string(e.position);
    }
  }
}

TEST(MayerVietoris, SquareHalves) {
  const FiniteSSet sq = nerve(FiniteCategory::square());
  const auto les = mayer_vietoris(
      CoverData::from_names(sq, std::vector<std::string>{"00<10<11"}, std::vector<std::string>{"00<01<11"}), 2);
  EXPECT_TRUE(les.exact());
  for (std::size_t k = 1; k < les.entries.size(); ++k) EXPECT_TRUE(rank_exact(les, k));
}

TEST(MayerVietoris, ConnectingMapOfSphere) {
  // Two discs glued along their boundary: H_2(S²) -> H_1(S¹) is an isomorphism.
  const Pushout p = pushout(boundary_subset(2).inclusion(), boundary_subset(2).inclusion());
  const CoverData cd(SimplicialSubset::image(p.left), SimplicialSubset::image(p.right));
  const auto les = mayer_vietoris(cd, 2);
  EXPECT_TRUE(les.exact());
  const auto& les_entries = les.entries;
  for (std::size_t k = 0; k + 1 < les_entries.size(); ++k)
    if (les_entries[k].degree == 2 && les_entries[k].position == LesPosition::x) {
      EXPECT_EQ(les_entries[k].group, (HomologyGroup{1, {}}));
      EXPECT_EQ(abs(les.maps[k](0, 0)), 1);
    }
}

TEST(MayerVietoris, LatticeExactness) {
  const HomologyGroup z{1, {}}, z2{0, {2}};
  // Z --2--> Z --> Z/2 is exact at the middle.
  EXPECT_TRUE(is_exact_at(IntMatrix(1, 1, {2}), z, IntMatrix(1, 1, {1}), z2));
  EXPECT_FALSE(is_exact_at(IntMatrix(1, 1, {4}), z, IntMatrix(1, 1, {1}), z2));
  EXPECT_FALSE(is_exact_at(IntMatrix(1, 1, {1}), z, IntMatrix(1, 1, {1}), z));
}

TEST(MayerVietoris, PairSequenceOfInterval) {
  // 0 -> N(∂Δ¹) -> N(Δ¹) -> N(Δ¹)/N(∂Δ¹) -> 0.
  const ChainMap alpha = chain_map(boundary_subset(1).inclusion());
  const ChainComplex rel(0, {0, 1}, {IntMatrix(0, 0), IntMatrix(0, 1)});
  const ChainMap beta(alpha.target(), rel, {{0, IntMatrix(0, 2)}, {1, IntMatrix(1, 1, {1})}});
  EXPECT_TRUE(check_exact_sequence({alpha, beta}, 0, 1).all_exact());
  const IntMatrix delta = connecting_map(alpha, beta, 0);
  ASSERT_EQ(delta.rows(), 2u);
  EXPECT_EQ(delta(0, 0) + delta(1, 0), 0);
  EXPECT_EQ(abs(delta(0, 0)), 1);
  EXPECT_TRUE(long_exact_sequence(alpha, beta, 1).exact());
}
