// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "simpcalc/constructions.hpp"
#include "simpcalc/dold_kan.hpp"
#include "simpcalc/enumeration.hpp"
#include "simpcalc/excision.hpp"
#include "simpcalc/homology.hpp"
#include "simpcalc/mayer_vietoris.hpp"
#include "simpcalc/nerve.hpp"
#include "simpcalc/quasicat.hpp"
#include "simpcalc/simplicial_chains.hpp"
#include "simpcalc/smith.hpp"
#include "simpcalc/tower.hpp"

using namespace simpcalc;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail = what;
    ok = ok && condition;
  }
};

const HomologyGroup Z0{0, {}};
const HomologyGroup Z1{1, {}};

FiniteSSet poset_nerve(const std::vector<std::vector<bool>>& leq, std::optional<int> d = std::nullopt) {
  std::vector<std::string> objects;
  for (std::size_t k = 0; k < leq.size(); ++k) objects.push_back(std::string(1, static_cast<char>('a' + k)));
  return nerve_preorder(
      objects, [&](int a, int b) { return leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }, d);
}

std::vector<FiniteSSet> suspension_spaces() {
  return {boundary(1).with_basepoint(0), oracle::corpus("circle"), boundary(2).with_basepoint(0),
          oracle::corpus("sphere2")};
}

bool rank_exact(const LongExactSequence& les, std::size_t k) {
  const std::size_t in = k == 0 ? 0 : oracle::rank(les.maps[k - 1]);
  const std::size_t out = k < les.maps.size() ? oracle::rank(les.maps[k]) : 0;
  return les.entries[k].group.torsion.empty() && les.entries[k].group.rank == in + out;
}

Check check_identities() {
  Check c;
  std::vector<std::pair<std::string, FiniteSSet>> objects;
  for (const auto& name : oracle::corpus_names()) objects.emplace_back(name, oracle::corpus(name));
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) objects.emplace_back("horn" + std::to_string(n) + "_" + std::to_string(i), horn(n, i));
  std::size_t k = 0;
  for (const auto& leq : oracle::small_posets(4)) objects.emplace_back("poset" + std::to_string(k++), poset_nerve(leq));
  for (const auto& [name, x] : objects) {
    const auto v = oracle::identity_violations(x, x.top_dim() + 1);
    c.require(v.empty(), name + ": " + (v.empty() ? "" : v.front()));
  }
  c.detail = c.ok ? std::to_string(objects.size()) + " objects" : c.detail;
  return c;
}

Check check_quasicategories() {
  Check c;
  for (int n = 0; n <= 3; ++n)
    c.require(is_quasicategory_up_to(standard_simplex(n), 3).passed, "simplex" + std::to_string(n) + " fails");
  for (const auto& leq : oracle::small_posets(4))
    c.require(is_quasicategory_up_to(poset_nerve(leq, 4), 3).passed, "a poset nerve fails");
  const auto v = is_quasicategory_up_to(boundary(2), 3);
  c.require(!v.passed && v.failure.has_value(), "boundary2 passes");
  if (v.failure) {
    c.require(v.failure->is_inner() && horn_fillers(*v.failure).empty(), "witness is not an unfillable inner horn");
    if (c.ok) c.detail = "boundary2 witness: horn " + std::to_string(v.failure->n) + "," + std::to_string(v.failure->i);
  }
  return c;
}

Check check_homology_table() {
  Check c;
  const std::vector<std::pair<std::string, std::pair<FiniteSSet, std::vector<HomologyGroup>>>> golden{
      {"point", {point(), {Z1, Z0, Z0}}},
      {"boundary2", {boundary(2), {Z1, Z1, Z0}}},
      {"D1/S0", {oracle::corpus("circle"), {Z1, Z1, Z0}}},
      {"D2/S1", {oracle::corpus("sphere2"), {Z1, Z0, Z1}}},
  };
  for (const auto& [name, entry] : golden) {
    const ChainComplex ch = normalized_chains(entry.first);
    for (int n = 0; n <= 2; ++n) {
      c.require(oracle::homology(ch, n) == entry.second[static_cast<std::size_t>(n)], name + ": oracle disagrees with table");
      c.require(homology(ch, n) == entry.second[static_cast<std::size_t>(n)], name + ": H_" + std::to_string(n));
    }
  }
  const ChainComplex s = normalized_chains(unreduced_suspension(boundary(2)));
  c.require(homology(s, 2) == Z1 && oracle::homology(s, 2) == Z1, "unreduced suspension of boundary2: H_2");
  return c;
}

Check check_mayer_vietoris_sequences() {
  Check c;
  const auto les = mayer_vietoris(two_arc_cover(), 2);
  c.require(les.exact(), "two-arc LES not exact");
  for (std::size_t k = 1; k < les.entries.size(); ++k) c.require(rank_exact(les, k), "two-arc rank check at slot " + std::to_string(k));
  for (std::size_t k = 0; k + 1 < les.entries.size(); ++k)
    if (les.entries[k].degree == 1 && les.entries[k].position == LesPosition::x) {
      c.require(les.entries[k].group == Z1, "H_1(X) != Z");
      c.require(oracle::rank(les.maps[k]) == 1, "connecting map does not hit H_1");
    }
  const FiniteSSet d2 = standard_simplex(2);
  const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> covers{
      {{"012"}, {"12"}}, {{"012"}, {"0"}}, {{"012"}, {"012"}}, {{"012"}, {"02"}}};
  for (const auto& [u, v] : covers) {
    const auto l = mayer_vietoris(CoverData::from_names(d2, u, v), 2);
    c.require(l.exact(), "triangle cover LES not exact");
    for (std::size_t k = 0; k < l.entries.size(); ++k) {
      const auto& e = l.entries[k];
      const std::size_t h0 = e.position == LesPosition::sum ? 2 : 1;
      c.require(e.group == HomologyGroup{e.degree == 0 ? h0 : 0, {}}, "reduced term does not vanish");
      if (k > 0) c.require(rank_exact(l, k), "triangle cover rank check");
    }
  }
  return c;
}

Check check_short_exact_sequences() {
  Check c;
  const FiniteSSet d2 = standard_simplex(2), s1 = boundary(2), d1 = standard_simplex(1);
  const FiniteSSet sq = nerve(FiniteCategory::square());
  const std::vector<std::string> v0{"0"};
  const std::vector<std::pair<std::string, CoverData>> covers{
      {"two-arc", two_arc_cover()},
      {"square halves", CoverData::from_names(sq, std::vector<std::string>{"00<10<11"}, std::vector<std::string>{"00<01<11"})},
      {"U = V = X", CoverData(SimplicialSubset::whole(s1), SimplicialSubset::whole(s1))},
      {"X and a vertex", CoverData(SimplicialSubset::whole(s1), SimplicialSubset::closure(s1, v0))},
      {"interval and a vertex", CoverData(SimplicialSubset::whole(d1), SimplicialSubset::closure(d1, v0))},
      {"triangle and an edge", CoverData::from_names(d2, std::vector<std::string>{"012"}, std::vector<std::string>{"12"})},
  };
  for (const auto& [name, cd] : covers) {
    const CoverSequence s = cover_short_exact_sequence(cd);
    c.require(s.exact(), name);
    for (int n = 0; n <= 2; ++n)
      c.require(s.sum.rank(n) == s.w.rank(n) + s.x.rank(n), name + ": ranks do not add up");
  }
  if (c.ok) c.detail = std::to_string(covers.size()) + " covers";
  return c;
}

Check check_bicartesian() {
  Check c;
  std::vector<std::pair<std::string, SSetSquare>> squares{
      {"circle", circle_square()},
      {"identity boundary2", identity_square(boundary(2))},
      {"identity product", identity_square(oracle::corpus("product_1_1"))},
  };
  const SSetMap b2 = boundary_subset(2).inclusion();
  squares.emplace_back("two discs", pushout_square(b2, b2));
  const SSetMap h = horn_subset(2, 1).inclusion();
  squares.emplace_back("two triangles on a horn", pushout_square(h, h));
  const SSetMap v = vertex_inclusion(boundary(2), 0);
  squares.emplace_back("wedge", pushout_square(v, vertex_inclusion(standard_simplex(1), 1)));
  for (const auto& [name, s] : squares) {
    c.require(is_homology_pushout(s), name + ": not a homotopy pushout");
    const ChainComplex total = total_complex(chain_square(s));
    for (int n = std::min(total.low(), 0); n <= 4; ++n)
      c.require(homology(total, n).is_zero(), name + ": total complex H_" + std::to_string(n) + " != 0");
  }
  const auto r = excision_check(collapsed_circle_square());
  c.require(!r.homology_pushout && !r.chain_bicartesian, "collapsed-circle square accepted");
  return c;
}

Check check_dold_kan() {
  Check c;
  std::mt19937 rng(20260101);
  int tested = 0;
  for (; tested < 12; ++tested) {
    const ChainComplex ch = oracle::random_complex(rng, 4, 3, 5);
    c.require(is_isomorphism(dold_kan_unit(ch, 4)), "unit is not an isomorphism");
    const ChainComplex n = moore_normalized(dold_kan_K(ch, 4));
    for (int d = 0; d <= 4; ++d) c.require(n.rank(d) == ch.rank(d), "Moore complex has the wrong rank");
    for (int d = 0; d <= 3; ++d)
      c.require(map_homotopy_groups(ch, d) == oracle::homology(ch, d), "pi_" + std::to_string(d) + " != H_" + std::to_string(d));
  }
  if (c.ok) c.detail = std::to_string(tested) + " complexes";
  return c;
}

Check check_suspension() {
  Check c;
  for (const FiniteSSet& x : suspension_spaces()) {
    const Suspension s = reduced_suspension_data(x);
    const ChainComplex a = reduced_normalized_chains(x), b = reduced_normalized_chains(s.space);
    const ChainMap f = suspension_comparison(s);
    for (int k = 0; k <= 2; ++k) {
      c.require(homology(b, k + 1) == homology(a, k), "H~_{k+1}(SX) != H~_k(X)");
      c.require(oracle::homology(b, k + 1) == oracle::homology(a, k), "oracle disagrees");
      const IntMatrix m = induced_map(f, k);
      const HomologyGroup g = homology(a, k);
      if (g.torsion.empty() && g.rank > 0) c.require(is_unimodular(m), "comparison is not an isomorphism");
    }
    c.require(quasi_iso(f), "comparison is not a quasi-isomorphism");
  }
  return c;
}

Check check_tower_collapse() {
  Check c;
  for (const FiniteSSet& x : suspension_spaces()) {
    c.require(p1_approximation(l1_mock_evaluator(), x, 4).value.is_zero(), "mock approximation is nonzero");
    const TowerReport r = tower_report(reduced_chains_evaluator(), x, 3, 3);
    for (std::size_t n = 1; n < r.stage_homology.size(); ++n)
      c.require(r.stage_homology[n] == r.stage_homology[0], "stage homology depends on n");
    for (bool q : r.map_is_quasi_iso) c.require(q, "structure map is not a quasi-isomorphism");
  }
  return c;
}

Check check_counterexample() {
  Check c;
  const auto r = identity_counterexample_report();
  c.require(r.pullback_h0_rank == 2, "pullback_H0_rank != 2");
  c.require(r.corner_h1 == Z1, "corner_H1 != Z");
  c.require(r.square_is_pushout, "square is not a pushout");
  if (c.ok) c.detail = "pullback_H0_rank = 2, corner_H1 = Z, square_is_pushout = true";
  return c;
}

Check check_injections() {
  Check c;
  const std::vector<std::string> sources{"point", "simplex1", "boundary1", "simplex2", "boundary2",
                                         "horn2_1", "horn3_1", "circle"};
  const std::vector<std::string> targets{"simplex2", "simplex3", "boundary3", "product_1_1", "product_2_1",
                                         "square", "cylinder_boundary2", "cone_boundary2", "sphere2"};
  std::mt19937 rng(424242);
  EnumerationOptions options;
  options.injective = true;
  int found = 0, attempts = 0;
  while (found < 50 && attempts < 2000) {
    ++attempts;
    const FiniteSSet x = oracle::corpus(sources[rng() % sources.size()]).with_basepoint(std::nullopt);
    const FiniteSSet y = oracle::corpus(targets[rng() % targets.size()]).with_basepoint(std::nullopt);
    const auto maps = enumerate_maps(x, y, options);
    if (maps.empty()) continue;
    const SSetMap& f = maps[rng() % maps.size()];
    const ChainMap g = chain_map(f);
    for (int n = g.low(); n <= g.high(); ++n)
      if (g.block(n).cols() > 0) c.require(is_split_injective(g.block(n)), "a block is not split injective");
    ++found;
  }
  c.require(found == 50, "only " + std::to_string(found) + " injective maps found");
  if (c.ok) c.detail = "50 maps";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"simplicial identities on the corpus", check_identities},
      {"quasi-category verdicts", check_quasicategories},
      {"homology golden table", check_homology_table},
      {"Mayer-Vietoris sequences", check_mayer_vietoris_sequences},
      {"short exact sequences of covers", check_short_exact_sequences},
      {"bicartesian pushout squares", check_bicartesian},
      {"Dold-Kan round trip and homotopy groups", check_dold_kan},
      {"suspension isomorphism", check_suspension},
      {"tower collapse", check_tower_collapse},
      {"counterexample report", check_counterexample},
      {"injections give split injective chain maps", check_injections},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      c = criteria[k].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    all = all && c.ok;
    std::cout << "criterion " << k + 1 << ": " << (c.ok ? "PASS" : "FAIL") << "  " << criteria[k].first;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
