#include <gtest/gtest.h>

#include "oracles.hpp"
#include "simpcalc/constructions.hpp"
#include "simpcalc/error.hpp"

using namespace simpcalc;

TEST(SSet, SimplexCountsOfStandardSimplex) {
  // Δⁿ has binomial(n + k + 1, k + 1) k-simplices, degenerate ones included.
  for (int n = 0; n <= 3; ++n) {
    const FiniteSSet d = standard_simplex(n);
    for (int k = 0; k <= 4; ++k)
      EXPECT_EQ(static_cast<long long>(d.simplex_count(k)), binomial(n + k + 1, k + 1)) << n << " " << k;
  }
}

TEST(SSet, CorpusSatisfiesIdentities) {
  for (const auto& name : oracle::corpus_names()) {
    const FiniteSSet x = oracle::corpus(name);
    const auto violations = oracle::identity_violations(x, x.top_dim() + 1);
    EXPECT_TRUE(violations.empty()) << name << ": " << (violations.empty() ? "" : violations.front());
  }
}

TEST(SSet, NormalFormIsCanonical) {
  const FiniteSSet d = standard_simplex(2);
  const Simplex v = d.simplex(d.id_of("1"));
  // s_1 s_0 v = s_0 s_0 v: both are the constant 2-simplex at 1.
  const Simplex a = v.degenerate(0).degenerate(1);
  const Simplex b = v.degenerate(0).degenerate(0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.degeneracies, (std::vector<int>{1, 0}));
  EXPECT_EQ(d.format(a), "s1s0:1");
}

TEST(SSet, ParseFormatRoundTrip) {
  const FiniteSSet x = oracle::corpus("product_2_1");
  for (int n = 0; n <= 3; ++n)
    for (const Simplex& s : x.simplices(n)) EXPECT_EQ(x.parse(x.format(s)), s);
}

TEST(SSet, CellsSortedByDimensionThenName) {
  const FiniteSSet x = standard_simplex(2);
  std::vector<std::string> names;
  for (const auto& c : x.cells()) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"0", "1", "2", "01", "02", "12", "012"}));
  EXPECT_EQ(x.counts(), (std::vector<std::size_t>{3, 3, 1}));
}

TEST(SSet, BuilderRejectsInconsistentFaces) {
  FiniteSSet::Builder b;
  const int a = b.add("a", 0);
  const int c = b.add("c", 0);
  const int e = b.add("e", 1, {Simplex::cell(a, 0), Simplex::cell(c, 0)});
  // Faces of t do not agree on the shared vertices.
  b.add("t", 2, {Simplex::cell(e, 1), Simplex::cell(e, 1), Simplex::cell(e, 1)});
  EXPECT_THROW(std::move(b).build(), InvalidArgument);
}

TEST(SSet, BuilderRejectsDuplicateNames) {
  FiniteSSet::Builder b;
  b.add("a", 0);
  b.add("a", 0);
  EXPECT_THROW(std::move(b).build(), InvalidArgument);
}

TEST(SSet, EqualityIsStructural) {
  EXPECT_EQ(standard_simplex(2), standard_simplex(2));
  EXPECT_NE(standard_simplex(1), boundary(2));
  EXPECT_EQ(vertex_inclusion(standard_simplex(1), 0).source(), standard_simplex(0));
  EXPECT_NE(point(), standard_simplex(0));
  EXPECT_EQ(point(), standard_simplex(0).with_basepoint(0));
}

TEST(SSet, MapsAreCheckedAndCompose) {
  const FiniteSSet d1 = standard_simplex(1), d2 = standard_simplex(2);
  const SSetMap f = simplex_map(MonotoneMap::coface(2, 2), d1, d2);
  const SSetMap g = simplex_map(MonotoneMap::codegeneracy(1, 0), d2, d1);
  const SSetMap gf = compose(g, f);
  EXPECT_EQ(gf, simplex_map(compose(MonotoneMap::codegeneracy(1, 0), MonotoneMap::coface(2, 2)), d1, d1));
  EXPECT_TRUE(f.is_injective());
  EXPECT_FALSE(g.is_injective());
  // Sending the edge 01 of Δ¹ to the vertex 0 while 1 goes to 1 is not simplicial.
  std::vector<Simplex> images{d1.simplex(0), d1.simplex(1), d1.simplex(0).degenerate(0)};
  EXPECT_THROW(SSetMap(d1, d1, images), InvalidArgument);
}

TEST(SSet, FacesOfDegenerateSimplices) {
  const FiniteSSet x = oracle::corpus("circle");
  const Simplex loop = x.simplex(x.first_of_dim(1));
  const Simplex s = loop.degenerate(1);
  EXPECT_EQ(x.face(s, 1), loop);
  EXPECT_EQ(x.face(s, 2), loop);
  EXPECT_EQ(x.face(s, 0), x.face(loop, 0).degenerate(0));
}
