#include "simpcalc/mayer_vietoris.hpp"

#include <algorithm>

#include "simpcalc/error.hpp"
#include "simpcalc/smith.hpp"

namespace simpcalc {

namespace {

IntMatrix relations(const HomologyGroup& g) {
  IntMatrix r(g.generator_count(), g.torsion.size());
  for (std::size_t i = 0; i < g.torsion.size(); ++i) r(i, i) = g.torsion[i];
  return r;
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool in_lattice(const IntMatrix& generators, const IntVector& v) {
  if (generators.cols() == 0) return is_zero_vector(v);
  return solve(generators, v).has_value();
}

}  // namespace

std::string to_string(LesPosition p) {
  switch (p) {
    case LesPosition::x_shifted: return "X-shifted";
    case LesPosition::w: return "W";
    case LesPosition::sum: return "U+V";
    case LesPosition::x: return "X";
  }
  return "?";
}

bool LongExactSequence::exact() const {
  return std::all_of(exact_at.begin(), exact_at.end(), [](bool b) { return b; });
}

bool is_exact_at(const IntMatrix& in, const HomologyGroup& middle, const IntMatrix& out, const HomologyGroup& target) {
  const std::size_t m = middle.generator_count();
  if (in.rows() != m || out.cols() != m || out.rows() != target.generator_count())
    throw InvalidArgument("is_exact_at: shapes do not match the groups");
  if (m == 0) return true;
  const IntMatrix image = IntMatrix::hstack(in, relations(middle));
  const IntMatrix target_relations = relations(target);
  for (std::size_t c = 0; c < image.cols(); ++c)
    if (!in_lattice(target_relations, out * image.column(c))) return false;
  const IntMatrix kernel = kernel_basis(IntMatrix::hstack(out, target_relations));
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    IntVector v = kernel.column(c);
    v.resize(m);
    if (!in_lattice(image, v)) return false;
  }
  return true;
}

IntMatrix connecting_map(const ChainMap& alpha, const ChainMap& beta, int n) {
  const HomologyPresentation source(beta.target(), n + 1);
  const HomologyPresentation target(alpha.source(), n);
  const IntMatrix lift_through = beta.block(n + 1);
  const IntMatrix pull_along = alpha.block(n);
  const IntMatrix boundary = beta.source().boundary(n + 1);
  std::vector<IntVector> columns;
  for (std::size_t k = 0; k < source.group().generator_count(); ++k) {
    const auto y = solve(lift_through, source.generator(k));
    if (!y) throw InvalidArgument("connecting_map: cycle does not lift; beta is not onto");
    const auto x = solve(pull_along, boundary * *y);
    if (!x) throw InvalidArgument("connecting_map: boundary is not in the image of alpha");
    columns.push_back(target.coordinates(*x));
  }
  return IntMatrix::from_columns(target.group().generator_count(), columns);
}

LongExactSequence long_exact_sequence(const ChainMap& alpha, const ChainMap& beta, int top) {
  if (top < 0) throw InvalidArgument("long_exact_sequence: negative top degree");
  if (!(alpha.target() == beta.source())) throw InvalidArgument("long_exact_sequence: maps are not composable");
  const ChainComplex& a = alpha.source();
  const ChainComplex& b = beta.source();
  const ChainComplex& c = beta.target();
  LongExactSequence les;
  les.entries.push_back(LesEntry{top + 1, LesPosition::x_shifted, homology(c, top + 1)});
  les.maps.push_back(connecting_map(alpha, beta, top));
  for (int n = top; n >= 0; --n) {
    const HomologyPresentation pa(a, n), pb(b, n), pc(c, n);
    les.entries.push_back(LesEntry{n, LesPosition::w, pa.group()});
    les.entries.push_back(LesEntry{n, LesPosition::sum, pb.group()});
    les.entries.push_back(LesEntry{n, LesPosition::x, pc.group()});
    les.maps.push_back(induced_map(alpha, pa, pb));
    les.maps.push_back(induced_map(beta, pb, pc));
    if (n > 0) les.maps.push_back(connecting_map(alpha, beta, n - 1));
  }
  les.exact_at.assign(les.entries.size(), true);
  for (std::size_t k = 1; k < les.entries.size(); ++k) {
    const HomologyGroup& middle = les.entries[k].group;
    const bool last = k + 1 == les.entries.size();
    const HomologyGroup zero;
    const HomologyGroup& next = last ? zero : les.entries[k + 1].group;
    const IntMatrix out = last ? IntMatrix(0, middle.generator_count()) : les.maps[k];
    les.exact_at[k] = is_exact_at(les.maps[k - 1], middle, out, next);
  }
  return les;
}

LongExactSequence mayer_vietoris(const CoverData& cd, int top) {
  const CoverSequence ses = cover_short_exact_sequence(cd);
  return long_exact_sequence(ses.alpha, ses.beta, top);
}

}  // namespace simpcalc
