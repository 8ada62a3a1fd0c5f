#include "simpcalc/excision.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "simpcalc/enumeration.hpp"
#include "simpcalc/error.hpp"
#include "simpcalc/simplicial_chains.hpp"

namespace simpcalc {

namespace {

Simplex fully_degenerate(int vertex, int dim) {
  Simplex s = Simplex::cell(vertex, 0);
  for (int k = 0; k < dim; ++k) s = s.degenerate(0);
  return s;
}

Quotient with_basepoint(Quotient q, int vertex) {
  FiniteSSet space = q.space.with_basepoint(vertex);
  SSetMap projection(SSetMap::Unchecked{}, q.projection.source(), space, q.projection.images());
  return Quotient{std::move(space), std::move(projection)};
}

int first_vertex(const FiniteSSet& x) { return x.basepoint().value_or(x.first_of_dim(0)); }

}  // namespace

SSetMap cylinder_end(const Product& cylinder, int end) {
  if (end != 0 && end != 1) throw InvalidArgument("cylinder_end: end must be 0 or 1");
  const FiniteSSet& x = cylinder.left();
  std::vector<Simplex> images;
  for (int id = 0; id < static_cast<int>(x.size()); ++id) {
    const int dim = x.cell(id).dim;
    const std::vector<int> vertices(static_cast<std::size_t>(dim + 1), end);
    images.push_back(cylinder.pair(x.simplex(id), simplex_with_vertices(cylinder.right(), 1, vertices)));
  }
  return SSetMap(SSetMap::Unchecked{}, x, cylinder.space(), std::move(images));
}

FiniteSSet cone(const FiniteSSet& x) {
  if (x.size() == 0) return point();
  const Product cyl = product(x, standard_simplex(1));
  return quotient(SimplicialSubset::image(cylinder_end(cyl, 1))).space;
}

FiniteSSet unreduced_suspension(const FiniteSSet& x) {
  if (x.size() == 0) return boundary(1);
  const Product cyl = product(x, standard_simplex(1));
  const SSetMap bottom = cylinder_end(cyl, 0), top = cylinder_end(cyl, 1);
  const int x0 = first_vertex(x);
  const int b = bottom.image_of_cell(x0).base, t = top.image_of_cell(x0).base;
  std::vector<std::pair<Simplex, Simplex>> generators;
  for (int id = 0; id < static_cast<int>(x.size()); ++id) {
    const int dim = x.cell(id).dim;
    generators.emplace_back(bottom.image_of_cell(id), fully_degenerate(b, dim));
    generators.emplace_back(top.image_of_cell(id), fully_degenerate(t, dim));
  }
  Quotient q = quotient_by(cyl.space(), generators);
  const int basepoint = q.projection.image_of_cell(b).base;
  return with_basepoint(std::move(q), basepoint).space;
}

Suspension reduced_suspension_data(const FiniteSSet& x) {
  const auto bp = x.basepoint();
  if (!bp) throw InvalidArgument("reduced_suspension: the space has no basepoint");
  const FiniteSSet interval = standard_simplex(1);
  Product cyl = product(x, interval);
  const SimplicialSubset ends = union_of(SimplicialSubset::image(cylinder_end(cyl, 0)),
                                         SimplicialSubset::image(cylinder_end(cyl, 1)));
  const Simplex segment = cyl.pair(x.simplex(*bp).degenerate(0), interval.simplex(interval.id_of("01")));
  const std::vector<int> generator{segment.base};
  const SimplicialSubset collapsed = union_of(ends, SimplicialSubset::closure(cyl.space(), generator));
  Quotient q = quotient(collapsed);
  FiniteSSet space = q.space;
  return Suspension{std::move(space), std::move(cyl), std::move(q)};
}

FiniteSSet reduced_suspension(const FiniteSSet& x) { return reduced_suspension_data(x).space; }

SSetMap descend(const Quotient& q, const SSetMap& h) {
  if (!(h.source() == q.projection.source())) throw InvalidArgument("descend: map is not defined on the quotiented set");
  std::vector<std::optional<Simplex>> chosen(q.space.size());
  for (int id = 0; id < static_cast<int>(h.source().size()); ++id) {
    const Simplex& img = q.projection.image_of_cell(id);
    if (img.is_degenerate()) continue;
    auto& slot = chosen[static_cast<std::size_t>(img.base)];
    if (slot && *slot != h.image_of_cell(id)) throw InvalidArgument("descend: map is not constant on classes");
    slot = h.image_of_cell(id);
  }
  std::vector<Simplex> images;
  for (auto& c : chosen) {
    if (!c) throw InvalidArgument("descend: projection is not surjective");
    images.push_back(*c);
  }
  return SSetMap(q.space, h.target(), std::move(images));
}

DoubleMappingCylinder double_mapping_cylinder(const SSetMap& f, const SSetMap& g) {
  if (!(f.source() == g.source())) throw InvalidArgument("double_mapping_cylinder: maps have different sources");
  const FiniteSSet& w = f.source();
  Product cyl = product(w, standard_simplex(1));
  const std::vector<FiniteSSet> parts{f.target(), cyl.space(), g.target()};
  const std::vector<std::string> prefixes{"U:", "C:", "V:"};
  Coproduct sum = coproduct(parts, prefixes);
  const SSetMap bottom = cylinder_end(cyl, 0), top = cylinder_end(cyl, 1);
  std::vector<std::pair<Simplex, Simplex>> generators;
  for (int id = 0; id < static_cast<int>(w.size()); ++id) {
    generators.emplace_back(sum.inclusions[0](f.image_of_cell(id)), sum.inclusions[1](bottom.image_of_cell(id)));
    generators.emplace_back(sum.inclusions[1](top.image_of_cell(id)), sum.inclusions[2](g.image_of_cell(id)));
  }
  Quotient q = quotient_by(sum.space, generators);
  SSetMap from_u = compose(q.projection, sum.inclusions[0]);
  SSetMap from_v = compose(q.projection, sum.inclusions[2]);
  Pushout po = pushout(f, g);
  FiniteSSet space = q.space;
  SSetMap comparison = SSetMap::identity(space);
  DoubleMappingCylinder d{std::move(space), f, g, std::move(cyl), std::move(sum), std::move(q),
                          std::move(from_u), std::move(from_v), std::move(po), std::move(comparison)};
  d.comparison = cylinder_map(d, d.pushout.left, d.pushout.right);
  return d;
}

SSetMap cylinder_map(const DoubleMappingCylinder& d, const SSetMap& p, const SSetMap& q) {
  if (!(p.source() == d.f.target()) || !(q.source() == d.g.target()) || !(p.target() == q.target()))
    throw InvalidArgument("cylinder_map: maps do not fit the cylinder");
  const SSetMap pf = compose(p, d.f);
  if (!(pf == compose(q, d.g))) throw NonCommutingDiagram("cylinder_map: p f and q g differ");
  std::vector<Simplex> images(d.coproduct.space.size());
  const auto fill = [&](const SSetMap& inclusion, auto&& value) {
    for (int id = 0; id < static_cast<int>(inclusion.source().size()); ++id)
      images[static_cast<std::size_t>(inclusion.image_of_cell(id).base)] = value(id);
  };
  fill(d.coproduct.inclusions[0], [&](int id) { return p.image_of_cell(id); });
  fill(d.coproduct.inclusions[1], [&](int id) { return pf(d.cylinder.first().image_of_cell(id)); });
  fill(d.coproduct.inclusions[2], [&](int id) { return q.image_of_cell(id); });
  const SSetMap h(SSetMap::Unchecked{}, d.coproduct.space, p.target(), std::move(images));
  return descend(d.quotient, h);
}

SSetSquare::SSetSquare(SSetMap f_, SSetMap g_, SSetMap p_, SSetMap q_)
    : f(std::move(f_)), g(std::move(g_)), p(std::move(p_)), q(std::move(q_)) {
  if (!(f.source() == g.source()) || !(p.source() == f.target()) || !(q.source() == g.target()) ||
      !(p.target() == q.target()))
    throw InvalidArgument("SSetSquare: corners do not match up");
  if (!(compose(p, f) == compose(q, g))) throw NonCommutingDiagram("SSetSquare: the square does not commute");
}

SSetSquare pushout_square(const SSetMap& f, const SSetMap& g) {
  const Pushout po = pushout(f, g);
  return SSetSquare(f, g, po.left, po.right);
}

SSetSquare identity_square(const FiniteSSet& x) {
  const SSetMap id = SSetMap::identity(x);
  return SSetSquare(id, id, id, id);
}

namespace {

struct CircleParts {
  SimplicialSubset ends = boundary_subset(1);
  FiniteSSet w = ends.materialize();
  FiniteSSet pt = standard_simplex(0);
  Quotient circle = quotient(ends);
  SSetMap collapse = constant_map(w, pt, 0);
  SSetMap at_basepoint = vertex_inclusion(circle.space, *circle.space.basepoint());
};

}  // namespace

SSetSquare circle_square() {
  const CircleParts c;
  return SSetSquare(c.collapse, c.ends.inclusion(), c.at_basepoint, c.circle.projection);
}

SSetSquare collapsed_circle_square() {
  const CircleParts c;
  return SSetSquare(c.collapse, c.collapse, c.at_basepoint, c.at_basepoint);
}

SSetSquare collapsed_point_square() {
  const CircleParts c;
  const SSetMap id = SSetMap::identity(c.pt);
  return SSetSquare(c.collapse, c.collapse, id, id);
}

bool is_homology_pushout(const SSetSquare& s) {
  const DoubleMappingCylinder d = double_mapping_cylinder(s.f, s.g);
  return quasi_iso(chain_map(cylinder_map(d, s.p, s.q)));
}

ChainSquare chain_square(const SSetSquare& s) {
  return ChainSquare(chain_map(s.f), chain_map(s.g), chain_map(s.p), chain_map(s.q));
}

ExcisionReport excision_check(const SSetSquare& s) {
  return ExcisionReport{is_homology_pushout(s), is_homotopy_bicartesian(chain_square(s))};
}

// ------------------------------------------------------------------- covers

CoverData::CoverData(SimplicialSubset u, SimplicialSubset v)
    : u_(std::move(u)), v_(std::move(v)), w_(intersection(u_, v_)) {
  if (!(union_of(u_, v_) == SimplicialSubset::whole(u_.ambient())))
    throw InvalidArgument("CoverData: U and V do not cover X");
}

CoverData CoverData::from_names(const FiniteSSet& x, std::span<const std::string> u, std::span<const std::string> v) {
  return CoverData(SimplicialSubset::closure(x, u), SimplicialSubset::closure(x, v));
}

SSetMap CoverData::w_to_u() const { return subset_inclusion(w_, u_); }
SSetMap CoverData::w_to_v() const { return subset_inclusion(w_, v_); }
SSetMap CoverData::u_to_x() const { return u_.inclusion(); }
SSetMap CoverData::v_to_x() const { return v_.inclusion(); }

SSetMap subset_inclusion(const SimplicialSubset& a, const SimplicialSubset& b) {
  if (!(a.ambient() == b.ambient())) throw InvalidArgument("subset_inclusion: different ambients");
  for (int id : a.ids())
    if (!b.contains(id)) throw InvalidArgument("subset_inclusion: not a subset");
  const FiniteSSet small = a.materialize(), large = b.materialize();
  std::vector<Simplex> images;
  for (const auto& c : small.cells()) images.push_back(large.simplex(large.id_of(c.name)));
  return SSetMap(small, large, std::move(images));
}

CoverSequence cover_short_exact_sequence(const CoverData& cd) {
  ChainMap alpha = map_into_sum(chain_map(cd.w_to_u()), chain_map(cd.w_to_v()));
  ChainMap beta = map_from_sum(chain_map(cd.u_to_x()), -chain_map(cd.v_to_x()));
  const ChainComplex& w = alpha.source();
  const ChainComplex& sum = alpha.target();
  const ChainComplex& x = beta.target();
  const std::vector<ChainMap> maps{ChainMap::zero(ChainComplex(), w), alpha, beta, ChainMap::zero(x, ChainComplex())};
  ExactnessReport report = check_exact_sequence(maps, 0, std::max(cd.x().top_dim(), 0));
  return CoverSequence{w, sum, x, std::move(alpha), std::move(beta), std::move(report)};
}

CoverData two_arc_cover() {
  const FiniteSSet x = boundary(2);
  const std::vector<std::string> u{"01", "12"}, v{"02"};
  return CoverData::from_names(x, u, v);
}

CounterexampleReport identity_counterexample_report() {
  const SSetSquare s = circle_square();
  const Pullback pb = pullback(s.p, s.q);
  CounterexampleReport r;
  r.pullback_h0_rank = homology(normalized_chains(pb.space), 0).rank;
  r.pullback_is_s0 = are_isomorphic(pb.space, boundary(1));
  r.corner_h1 = homology(normalized_chains(s.x()), 1);
  r.excision = excision_check(s);
  r.square_is_pushout = r.excision.homology_pushout;
  return r;
}

}  // namespace simpcalc
