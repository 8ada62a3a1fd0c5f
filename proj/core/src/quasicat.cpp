#include "simpcalc/quasicat.hpp"

#include <algorithm>

#include "simpcalc/error.hpp"
#include "simpcalc/nerve.hpp"

namespace simpcalc {

namespace {

std::size_t uz(int k) { return static_cast<std::size_t>(k); }

FiniteSSet unpointed(const FiniteSSet& x) { return x.is_pointed() ? x.with_basepoint(std::nullopt) : x; }

std::vector<int> facet_vertices(int n, int j) {
  std::vector<int> v;
  for (int k = 0; k <= n; ++k)
    if (k != j) v.push_back(k);
  return v;
}

/// images of f ∘ m, where f is given by its cell images
std::vector<Simplex> precompose(const std::vector<Simplex>& f, const SSetMap& m) {
  std::vector<Simplex> out;
  out.reserve(m.images().size());
  for (const auto& s : m.images()) out.push_back(f[uz(s.base)].pull_back_along(s.surjection()));
  return out;
}

bool fills(const FiniteSSet& target, const Simplex& t, const HornMap& h) {
  for (int j = 0; j <= h.n; ++j) {
    if (j == h.i) continue;
    if (target.face(t, j) != h.facet(j)) return false;
  }
  return true;
}

}  // namespace

// ----------------------------------------------------------------- horns

HornMap::HornMap(int n_, int i_, SSetMap assignment_) : n(n_), i(i_), assignment(std::move(assignment_)) {
  if (!(assignment.source() == horn(n, i))) throw InvalidArgument("HornMap: assignment is not defined on the horn");
}

Simplex HornMap::facet(int j) const {
  if (j == i || j < 0 || j > n) throw InvalidArgument("HornMap: facet index out of range");
  const auto v = facet_vertices(n, j);
  return assignment.image_of_cell(assignment.source().id_of(simplex_cell_name(v, n)));
}

std::vector<Simplex> horn_fillers(const HornMap& h) {
  std::vector<Simplex> out;
  for (const auto& t : h.target().simplices(h.n))
    if (fills(h.target(), t, h)) out.push_back(t);
  return out;
}

QuasicategoryVerdict is_quasicategory_up_to(const FiniteSSet& c, int d, std::size_t max_candidates) {
  if (d < 2) throw InvalidArgument("is_quasicategory_up_to: need d >= 2");
  const FiniteSSet target = unpointed(c);
  QuasicategoryVerdict verdict;
  verdict.max_dimension = d;
  for (int n = 2; n <= d; ++n) {
    const auto candidates = target.simplices(n);
    for (int i = 1; i < n; ++i) {
      const FiniteSSet source = horn(n, i);
      for (auto& m : enumerate_maps(source, target, EnumerationOptions{max_candidates, false})) {
        ++verdict.horns_checked;
        HornMap h(n, i, std::move(m));
        const bool filled =
            std::any_of(candidates.begin(), candidates.end(), [&](const Simplex& t) { return fills(target, t, h); });
        if (!filled) {
          verdict.failure = std::move(h);
          return verdict;
        }
      }
    }
  }
  verdict.passed = true;
  return verdict;
}

std::vector<CompositionWitness> compositions(const FiniteSSet& c, const Simplex& f, const Simplex& g) {
  if (f.dim != 1 || g.dim != 1 || !c.is_valid(f) || !c.is_valid(g))
    throw InvalidArgument("compositions: f and g must be edges");
  if (c.face(f, 0) != c.face(g, 1)) throw InvalidArgument("compositions: target of f is not the source of g");
  std::vector<CompositionWitness> out;
  for (const auto& s : c.simplices(2)) {
    if (c.face(s, 2) == f && c.face(s, 0) == g) out.push_back({f, g, c.face(s, 1), s});
  }
  return out;
}

// ------------------------------------------------------- function complexes

FunctionComplex::FunctionComplex(FiniteSSet x, FiniteSSet y, int d, std::size_t max_candidates)
    : x_(unpointed(x)), y_(unpointed(y)) {
  if (d < 0) throw InvalidArgument("internal hom: negative truncation");
  std::vector<FiniteSSet> simplices;
  for (int k = 0; k <= d; ++k) {
    simplices.push_back(standard_simplex(k));
    cylinders_.push_back(product(x_, simplices.back()));
    std::vector<std::vector<Simplex>> level;
    std::map<std::vector<Simplex>, int> lookup;
    for (const auto& m : enumerate_maps(cylinders_.back().space(), y_, EnumerationOptions{max_candidates, false})) {
      lookup.emplace(m.images(), static_cast<int>(level.size()));
      level.push_back(m.images());
    }
    levels_.push_back(std::move(level));
    lookup_.push_back(std::move(lookup));
  }

  const SSetMap id = SSetMap::identity(x_);
  LevelwiseSet set;
  for (int k = 0; k <= d; ++k) {
    set.sizes.push_back(level_size(k));
    std::vector<int> faces, degens;
    std::vector<SSetMap> face_maps, degen_maps;
    for (int i = 0; k >= 1 && i <= k; ++i) {
      const SSetMap delta = simplex_map(MonotoneMap::coface(k, i), simplices[uz(k - 1)], simplices[uz(k)]);
      face_maps.push_back(product_map(id, delta, cylinders_[uz(k - 1)], cylinders_[uz(k)]));
    }
    for (int j = 0; k < d && j <= k; ++j) {
      const SSetMap sigma = simplex_map(MonotoneMap::codegeneracy(k, j), simplices[uz(k + 1)], simplices[uz(k)]);
      degen_maps.push_back(product_map(id, sigma, cylinders_[uz(k + 1)], cylinders_[uz(k)]));
    }
    for (const auto& f : levels_[uz(k)]) {
      for (const auto& m : face_maps) faces.push_back(index_of(k - 1, precompose(f, m)));
      for (const auto& m : degen_maps) degens.push_back(index_of(k + 1, precompose(f, m)));
    }
    set.faces.push_back(std::move(faces));
    set.degeneracies.push_back(std::move(degens));
  }
  set.name = [](int k, int idx) { return "m" + std::to_string(k) + "." + std::to_string(idx); };
  ExtractedSet extracted = extract(set);
  space_ = extracted.space;
  forms_ = std::move(extracted.normal_forms);
  cells_.assign(space_.size(), {-1, -1});
  for (int k = 0; k <= d; ++k)
    for (int idx = 0; idx < static_cast<int>(level_size(k)); ++idx) {
      const Simplex& s = forms_[uz(k)][uz(idx)];
      if (!s.is_degenerate()) cells_[uz(s.base)] = {k, idx};
    }
}

SSetMap FunctionComplex::element(int k, int idx) const {
  return SSetMap(SSetMap::Unchecked{}, cylinder(k).space(), y_, levels_[uz(k)][uz(idx)]);
}

int FunctionComplex::index_of(int k, const std::vector<Simplex>& images) const {
  const auto& lookup = lookup_[uz(k)];
  auto it = lookup.find(images);
  if (it == lookup.end()) throw InvalidArgument("FunctionComplex: not a map of the expected shape");
  return it->second;
}

FiniteSSet internal_hom_truncated(const FiniteSSet& x, const FiniteSSet& y, int d, std::size_t max_candidates) {
  return FunctionComplex(x, y, d, max_candidates).space();
}

SSetMap precomposition(const SSetMap& a, const FunctionComplex& from, const FunctionComplex& to) {
  if (!(from.codomain() == to.codomain()) || from.dimension() != to.dimension())
    throw InvalidArgument("precomposition: function complexes do not match");
  const SSetMap bare(SSetMap::Unchecked{}, unpointed(a.source()), unpointed(a.target()), a.images());
  if (!(bare.target() == from.domain()) || !(bare.source() == to.domain()))
    throw InvalidArgument("precomposition: map does not match the function complexes");
  std::vector<SSetMap> cylinder_maps;
  for (int k = 0; k <= from.dimension(); ++k) {
    const SSetMap id = SSetMap::identity(from.cylinder(k).right());
    cylinder_maps.push_back(product_map(bare, id, to.cylinder(k), from.cylinder(k)));
  }
  std::vector<Simplex> images;
  for (int cell = 0; cell < static_cast<int>(from.space().size()); ++cell) {
    const auto [k, idx] = from.locate(cell);
    const auto f = from.element(k, idx);
    images.push_back(to.simplex(k, to.index_of(k, precompose(f.images(), cylinder_maps[uz(k)]))));
  }
  return SSetMap(SSetMap::Unchecked{}, from.space(), to.space(), std::move(images));
}

FiniteSSet mapping_space(const FiniteSSet& c, int x, int y, int d, std::size_t max_candidates) {
  if (c.cell(x).dim != 0 || c.cell(y).dim != 0) throw InvalidArgument("mapping_space: x and y must be vertices");
  const FiniteSSet target = unpointed(c);
  const FunctionComplex paths(standard_simplex(1), target, d, max_candidates);
  const FunctionComplex points(standard_simplex(0), target, d, max_candidates);
  const SSetMap ev0 = precomposition(simplex_map(MonotoneMap::coface(1, 1)), paths, points);
  const SSetMap ev1 = precomposition(simplex_map(MonotoneMap::coface(1, 0)), paths, points);
  const Product ends = product(points.space(), points.space(), d);
  const SSetMap ev = pairing(ev0, ev1, ends);
  auto vertex_of = [&](int v) { return points.simplex(0, points.index_of(0, {target.simplex(v)})); };
  const Simplex corner = ends.pair(vertex_of(x), vertex_of(y));
  return pullback(ev, vertex_inclusion(ends.space(), corner.base), d).space;
}

// ----------------------------------------------------------------- squares

FiniteSSet square_nerve() { return nerve(FiniteCategory::square(), 2); }

SquareDiagram::SquareDiagram(SSetMap diagram) : diagram_(std::move(diagram)) {
  if (!(unpointed(diagram_.source()) == square_nerve()))
    throw InvalidArgument("SquareDiagram: source is not the nerve of [1] x [1]");
}

SquareDiagram SquareDiagram::from_triangles(const FiniteSSet& c, const Simplex& sigma, const Simplex& tau) {
  if (sigma.dim != 2 || tau.dim != 2 || !c.is_valid(sigma) || !c.is_valid(tau))
    throw InvalidArgument("SquareDiagram: triangles must be 2-simplices");
  if (c.face(sigma, 1) != c.face(tau, 1)) throw InvalidArgument("SquareDiagram: triangles do not share d1");
  const FiniteSSet source = square_nerve();
  const std::map<std::string, Simplex> named{
      {"00", c.vertex(sigma, 0)},       {"10", c.vertex(sigma, 1)},       {"11", c.vertex(sigma, 2)},
      {"01", c.vertex(tau, 1)},         {"00<10", c.face(sigma, 2)},      {"10<11", c.face(sigma, 0)},
      {"00<11", c.face(sigma, 1)},      {"00<01", c.face(tau, 2)},        {"01<11", c.face(tau, 0)},
      {"00<10<11", sigma},              {"00<01<11", tau}};
  std::vector<Simplex> images;
  for (const auto& cell : source.cells()) images.push_back(named.at(cell.name));
  return SquareDiagram(SSetMap(source, unpointed(c), std::move(images)));
}

Simplex SquareDiagram::at(std::string_view name) const { return diagram_.image_of_cell(diagram_.source().id_of(name)); }

Simplex SquareDiagram::object(std::string_view name) const {
  if (name != "00" && name != "10" && name != "01" && name != "11")
    throw InvalidArgument("SquareDiagram: unknown object '" + std::string(name) + "'");
  return at(name);
}

Simplex SquareDiagram::f() const { return at("00<10"); }
Simplex SquareDiagram::g() const { return at("10<11"); }
Simplex SquareDiagram::f_prime() const { return at("00<01"); }
Simplex SquareDiagram::g_prime() const { return at("01<11"); }
Simplex SquareDiagram::h() const { return at("00<11"); }
Simplex SquareDiagram::sigma() const { return at("00<10<11"); }
Simplex SquareDiagram::tau() const { return at("00<01<11"); }

}  // namespace simpcalc
