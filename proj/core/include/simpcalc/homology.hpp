#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "simpcalc/chain_complex.hpp"
#include "simpcalc/integer_matrix.hpp"

namespace simpcalc {

/// ℤ^rank ⊕ ℤ/t_1 ⊕ ... ⊕ ℤ/t_k with every t_i >= 2 and t_1 | t_2 | ... | t_k.
struct HomologyGroup {
  std::size_t rank = 0;
  IntVector torsion;

  /// Throws InvalidArgument unless the torsion is a divisibility chain of
  /// factors >= 2.
  static HomologyGroup make(std::size_t rank, IntVector torsion);

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  /// Number of generators: torsion ones first, then free ones.
  std::size_t generator_count() const { return torsion.size() + rank; }
  /// "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

HomologyGroup homology(const ChainComplex& c, int n);
/// H_n for every n in low..high.
std::vector<HomologyGroup> homology_groups(const ChainComplex& c, int low, int high);

/// H_n(c) with chosen cycle representatives, so that homology classes can
/// be given coordinates. Generators are ordered as in HomologyGroup:
/// torsion generators (coordinates mod t_i) first, then free ones.
class HomologyPresentation {
 public:
  HomologyPresentation(const ChainComplex& c, int n);

  const HomologyGroup& group() const { return group_; }
  int degree() const { return degree_; }
  /// A cycle representing generator k.
  IntVector generator(std::size_t k) const;
  /// Coordinates of the class of a cycle; torsion coordinates reduced to
  /// 0 <= x < t_i. Throws InvalidArgument if z is not a cycle.
  IntVector coordinates(const IntVector& z) const;
  /// Whether the cycle is a boundary.
  bool is_boundary(const IntVector& z) const;

 private:
  int degree_ = 0;
  HomologyGroup group_;
  IntMatrix outgoing_;      // ∂_n, to test cycles
  IntMatrix cycles_;        // basis of ker ∂_n, as columns
  IntMatrix coordinates_;   // left inverse of cycles_
  IntMatrix change_;        // U from the Smith form of the boundaries in cycle coordinates
  IntMatrix change_inverse_;
  IntVector factors_;       // all invariant factors, including ones
};

/// Matrix of H_n(f) in the generators of the two presentations. Entries in
/// torsion rows are reduced mod the factor.
IntMatrix induced_map(const ChainMap& f, const HomologyPresentation& source, const HomologyPresentation& target);
IntMatrix induced_map(const ChainMap& f, int n);

/// Reduces each row of a matrix of homology coordinates mod its torsion
/// factor (free rows untouched).
IntMatrix reduce_coordinates(const IntMatrix& m, const HomologyGroup& target);

}  // namespace simpcalc
