#include <gtest/gtest.h>

#include "oracles.hpp"
#include "simpcalc/constructions.hpp"
#include "simpcalc/error.hpp"
#include "simpcalc/homology.hpp"
#include "simpcalc/nerve.hpp"
#include "simpcalc/quasicat.hpp"
#include "simpcalc/simplicial_chains.hpp"

using namespace simpcalc;

namespace {

FiniteSSet poset_nerve(const std::vector<std::vector<bool>>& leq, int d) {
  std::vector<std::string> objects;
  for (std::size_t k = 0; k < leq.size(); ++k) objects.push_back(std::string(1, static_cast<char>('a' + k)));
  return nerve_preorder(objects, [&](int a, int b) { return leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; },
                        d);
}

}  // namespace

TEST(Quasicat, StandardSimplicesPass) {
  for (int n = 0; n <= 3; ++n) {
    const auto v = is_quasicategory_up_to(standard_simplex(n), 3);
    EXPECT_TRUE(v.passed) << n;
    EXPECT_FALSE(v.failure.has_value());
  }
}

TEST(Quasicat, PosetNervesPass) {
  for (const auto& leq : oracle::small_posets(4)) EXPECT_TRUE(is_quasicategory_up_to(poset_nerve(leq, 4), 3).passed);
}

TEST(Quasicat, BoundaryOfTriangleFailsWithWitness) {
  const FiniteSSet x = boundary(2);
  const auto v = is_quasicategory_up_to(x, 2);
  EXPECT_FALSE(v.passed);
  ASSERT_TRUE(v.failure.has_value());
  EXPECT_EQ(v.failure->n, 2);
  EXPECT_EQ(v.failure->i, 1);
  EXPECT_TRUE(horn_fillers(*v.failure).empty());
  EXPECT_EQ(v.failure->facet(0), x.simplex(x.id_of("12")));
  EXPECT_EQ(v.failure->facet(2), x.simplex(x.id_of("01")));
}

TEST(Quasicat, CircleIsNotAQuasicategory) {
  // The loop composed with itself has no witness in Δ¹/∂Δ¹.
  EXPECT_FALSE(is_quasicategory_up_to(oracle::corpus("circle"), 2).passed);
}

TEST(Quasicat, FillersInSimplexAreUnique) {
  const FiniteSSet d3 = standard_simplex(3);
  for (int i = 1; i <= 2; ++i) {
    const SSetMap inclusion = horn_subset(3, i).inclusion();
    const auto fillers = horn_fillers(HornMap(3, i, inclusion));
    ASSERT_EQ(fillers.size(), 1u);
    EXPECT_EQ(fillers.front(), d3.simplex(d3.id_of("0123")));
  }
}

TEST(Quasicat, CompositionWitnesses) {
  const FiniteSSet x = standard_simplex(2);
  const auto w = compositions(x, x.simplex(x.id_of("01")), x.simplex(x.id_of("12")));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w.front().h, x.simplex(x.id_of("02")));
  // Composing with an identity is witnessed by a degenerate triangle.
  const Simplex id1 = x.simplex(x.id_of("1")).degenerate(0);
  const auto d = compositions(x, x.simplex(x.id_of("01")), id1);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_TRUE(d.front().sigma.is_degenerate());
}

TEST(Quasicat, FunctionComplexLevelsCountMaps) {
  const FiniteSSet x = standard_simplex(1), y = standard_simplex(2);
  const FunctionComplex fc(x, y, 2);
  for (int k = 0; k <= 2; ++k)
    EXPECT_EQ(fc.level_size(k), oracle::count_maps(fc.cylinder(k).space(), y)) << k;
}

TEST(Quasicat, MappingSpacesInPosetNervesAreContractible) {
  const FiniteSSet sq = nerve(FiniteCategory::square());
  const FiniteSSet m = mapping_space(sq, sq.id_of("00"), sq.id_of("11"), 1);
  EXPECT_EQ(m.counts(), (std::vector<std::size_t>{1}));
  const FiniteSSet d2 = standard_simplex(2);
  const FiniteSSet m2 = mapping_space(d2, d2.id_of("0"), d2.id_of("2"), 2);
  EXPECT_EQ(homology(normalized_chains(m2), 0), (HomologyGroup{1, {}}));
  EXPECT_TRUE(mapping_space(d2, d2.id_of("2"), d2.id_of("0"), 1).size() == 0);
}

TEST(Quasicat, SquareDiagramFromTriangles) {
  const FiniteSSet sq = nerve(FiniteCategory::square());
  const SquareDiagram s = SquareDiagram::from_triangles(sq, sq.simplex(sq.id_of("00<10<11")),
                                                        sq.simplex(sq.id_of("00<01<11")));
  EXPECT_EQ(s.h(), sq.simplex(sq.id_of("00<11")));
  EXPECT_EQ(s.f(), sq.simplex(sq.id_of("00<10")));
  EXPECT_EQ(s.g_prime(), sq.simplex(sq.id_of("01<11")));
  const Simplex flat = sq.simplex(sq.id_of("00<10")).degenerate(0);
  EXPECT_THROW(SquareDiagram::from_triangles(sq, sq.simplex(sq.id_of("00<10<11")), flat), InvalidArgument);
}

TEST(Quasicat, EnumerationBudgetIsEnforced) {
  EXPECT_THROW(is_quasicategory_up_to(standard_simplex(3), 3, 2), EnumerationLimitExceeded);
}
