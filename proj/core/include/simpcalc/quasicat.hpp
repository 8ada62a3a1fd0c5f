#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simpcalc/constructions.hpp"
#include "simpcalc/enumeration.hpp"
#include "simpcalc/simplicial_set.hpp"

namespace simpcalc {

/// A map Λⁿᵢ -> target.
struct HornMap {
  int n = 0;
  int i = 0;
  SSetMap assignment;

  /// Validates that the assignment's source is Λⁿᵢ.
  HornMap(int n, int i, SSetMap assignment);

  const FiniteSSet& target() const { return assignment.target(); }
  bool is_inner() const { return 0 < i && i < n; }
  /// Image of the facet opposite vertex j (j != i).
  Simplex facet(int j) const;
};

/// Every n-simplex of the target restricting to the horn map.
std::vector<Simplex> horn_fillers(const HornMap& h);

struct QuasicategoryVerdict {
  bool passed = false;
  int max_dimension = 0;
  std::size_t horns_checked = 0;
  std::optional<HornMap> failure;  // the first inner horn without a filler
};

/// Checks every inner horn Λⁿᵢ -> C with 2 <= n <= d.
QuasicategoryVerdict is_quasicategory_up_to(const FiniteSSet& c, int d,
                                            std::size_t max_candidates = default_enumeration_limit);

/// sigma has faces (d0, d1, d2) = (g, h, f).
struct CompositionWitness {
  Simplex f;
  Simplex g;
  Simplex h;
  Simplex sigma;
};

/// All 2-simplices sigma with d2 sigma = f and d0 sigma = g.
std::vector<CompositionWitness> compositions(const FiniteSSet& c, const Simplex& f, const Simplex& g);

/// The function complex Y^X up to dimension d: a k-simplex is a map
/// X × Δᵏ -> Y. Basepoints are ignored.
class FunctionComplex {
 public:
  FunctionComplex(FiniteSSet x, FiniteSSet y, int d, std::size_t max_candidates = default_enumeration_limit);

  const FiniteSSet& space() const { return space_; }
  const FiniteSSet& domain() const { return x_; }
  const FiniteSSet& codomain() const { return y_; }
  int dimension() const { return static_cast<int>(levels_.size()) - 1; }
  std::size_t level_size(int k) const { return levels_[static_cast<std::size_t>(k)].size(); }
  /// X × Δᵏ.
  const Product& cylinder(int k) const { return cylinders_[static_cast<std::size_t>(k)]; }
  /// The map X × Δᵏ -> Y of element idx of level k.
  SSetMap element(int k, int idx) const;
  /// Element index of a map X × Δᵏ -> Y, given by its cell images.
  int index_of(int k, const std::vector<Simplex>& images) const;
  /// Element idx of level k as a simplex of space().
  const Simplex& simplex(int k, int idx) const { return forms_[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx)]; }
  /// The (level, index) pair of a nondegenerate cell of space().
  std::pair<int, int> locate(int cell) const { return cells_[static_cast<std::size_t>(cell)]; }

 private:
  FiniteSSet x_, y_;
  std::vector<Product> cylinders_;
  std::vector<std::vector<std::vector<Simplex>>> levels_;
  std::vector<std::map<std::vector<Simplex>, int>> lookup_;
  std::vector<std::vector<Simplex>> forms_;
  std::vector<std::pair<int, int>> cells_;
  FiniteSSet space_;
};

FiniteSSet internal_hom_truncated(const FiniteSSet& x, const FiniteSSet& y, int d,
                                  std::size_t max_candidates = default_enumeration_limit);

/// Y^X -> Y^X' induced by precomposition with a: X' -> X. Both complexes
/// must share Y and their dimension.
SSetMap precomposition(const SSetMap& a, const FunctionComplex& from, const FunctionComplex& to);

/// The pullback of p: A -> Z and q: B -> Z.
inline Pullback sset_pullback(const SSetMap& p, const SSetMap& q, std::optional<int> max_dim = std::nullopt) {
  return pullback(p, q, max_dim);
}

/// Map_C(x, y) as the pullback of C^{Δ¹} -> C^{Δ⁰} × C^{Δ⁰} <- Δ⁰ at (x, y),
/// truncated at dimension d.
FiniteSSet mapping_space(const FiniteSSet& c, int x, int y, int d,
                         std::size_t max_candidates = default_enumeration_limit);

/// A commutative square in C: a map N([1] × [1]) -> C.
class SquareDiagram {
 public:
  /// Validates that the diagram's source is N([1] × [1]) truncated at 2.
  explicit SquareDiagram(SSetMap diagram);
  /// Assembles the diagram from the two triangles; throws InvalidArgument
  /// unless they share their long edge d1.
  static SquareDiagram from_triangles(const FiniteSSet& c, const Simplex& sigma, const Simplex& tau);

  const SSetMap& diagram() const { return diagram_; }
  /// Objects "00", "10", "01", "11".
  Simplex object(std::string_view name) const;
  Simplex f() const;        // 00 -> 10
  Simplex g() const;        // 10 -> 11
  Simplex f_prime() const;  // 00 -> 01
  Simplex g_prime() const;  // 01 -> 11
  Simplex h() const;        // 00 -> 11
  Simplex sigma() const;    // witnesses h = g ∘ f
  Simplex tau() const;      // witnesses h = g' ∘ f'

 private:
  Simplex at(std::string_view name) const;
  SSetMap diagram_;
};

/// N([1] × [1]) truncated at dimension 2.
FiniteSSet square_nerve();

}  // namespace simpcalc
