#include "simpcalc/homology.hpp"

#include <sstream>

#include "simpcalc/error.hpp"
#include "simpcalc/smith.hpp"

namespace simpcalc {

namespace {

Integer mod_positive(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

HomologyGroup HomologyGroup::make(std::size_t rank, IntVector torsion) {
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    if (torsion[k] < 2) throw InvalidArgument("HomologyGroup: torsion factors must be at least 2");
    if (k > 0 && torsion[k] % torsion[k - 1] != 0)
      throw InvalidArgument("HomologyGroup: torsion factors must form a divisibility chain");
  }
  return HomologyGroup{rank, std::move(torsion)};
}

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

HomologyGroup homology(const ChainComplex& c, int n) { return HomologyPresentation(c, n).group(); }

std::vector<HomologyGroup> homology_groups(const ChainComplex& c, int low, int high) {
  std::vector<HomologyGroup> out;
  for (int n = low; n <= high; ++n) out.push_back(homology(c, n));
  return out;
}

HomologyPresentation::HomologyPresentation(const ChainComplex& c, int n) : degree_(n), outgoing_(c.boundary(n)) {
  cycles_ = kernel_basis(outgoing_);
  coordinates_ = cycles_.cols() == 0 ? IntMatrix(0, c.rank(n)) : left_inverse(cycles_);
  const SmithDecomposition s = smith_normal_form(coordinates_ * c.boundary(n + 1));
  change_ = s.left;
  change_inverse_ = s.left_inverse;
  factors_ = s.invariant_factors();
  IntVector torsion;
  for (const auto& d : factors_)
    if (d > 1) torsion.push_back(d);
  group_ = HomologyGroup{cycles_.cols() - factors_.size(), std::move(torsion)};
}

IntVector HomologyPresentation::generator(std::size_t k) const {
  if (k >= group_.generator_count()) throw InvalidArgument("HomologyPresentation: generator index out of range");
  const std::size_t first_torsion = factors_.size() - group_.torsion.size();
  const std::size_t idx = k < group_.torsion.size() ? first_torsion + k : factors_.size() + (k - group_.torsion.size());
  return cycles_ * change_inverse_.column(idx);
}

IntVector HomologyPresentation::coordinates(const IntVector& z) const {
  const IntVector image = outgoing_ * z;
  for (const auto& x : image)
    if (x != 0) throw InvalidArgument("HomologyPresentation: not a cycle");
  const IntVector w = change_ * (coordinates_ * z);
  IntVector out;
  const std::size_t first_torsion = factors_.size() - group_.torsion.size();
  for (std::size_t i = first_torsion; i < factors_.size(); ++i) out.push_back(mod_positive(w[i], factors_[i]));
  for (std::size_t i = factors_.size(); i < w.size(); ++i) out.push_back(w[i]);
  return out;
}

bool HomologyPresentation::is_boundary(const IntVector& z) const {
  for (const auto& x : coordinates(z))
    if (x != 0) return false;
  return true;
}

IntMatrix induced_map(const ChainMap& f, const HomologyPresentation& source, const HomologyPresentation& target) {
  if (source.degree() != target.degree()) throw InvalidArgument("induced_map: presentations in different degrees");
  const int n = source.degree();
  const IntMatrix block = f.block(n);
  std::vector<IntVector> columns;
  for (std::size_t k = 0; k < source.group().generator_count(); ++k)
    columns.push_back(target.coordinates(block * source.generator(k)));
  return IntMatrix::from_columns(target.group().generator_count(), columns);
}

IntMatrix induced_map(const ChainMap& f, int n) {
  return induced_map(f, HomologyPresentation(f.source(), n), HomologyPresentation(f.target(), n));
}

IntMatrix reduce_coordinates(const IntMatrix& m, const HomologyGroup& target) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < target.torsion.size(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = mod_positive(out(i, j), target.torsion[i]);
  return out;
}

}  // namespace simpcalc
