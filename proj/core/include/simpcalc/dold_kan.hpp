#pragma once

#include <cstddef>
#include <vector>

#include "simpcalc/chain_complex.hpp"
#include "simpcalc/delta.hpp"
#include "simpcalc/homology.hpp"
#include "simpcalc/integer_matrix.hpp"

namespace simpcalc {

/// A simplicial free abelian group up to dimension cap: ranks, faces
/// d_i: A_n -> A_{n-1} (n >= 1) and degeneracies s_j: A_n -> A_{n+1}
/// (n < cap), all as integer matrices.
class SimplicialAbelianGroup {
 public:
  /// faces[n][i] for 1 <= n <= cap (faces[0] empty); degeneracies[n][j] for
  /// n < cap (degeneracies[cap] empty). Validates shapes and every
  /// simplicial identity; throws InvalidArgument on failure.
  SimplicialAbelianGroup(std::vector<std::size_t> ranks, std::vector<std::vector<IntMatrix>> faces,
                         std::vector<std::vector<IntMatrix>> degeneracies);

  /// The constant simplicial group ℤ^rank.
  static SimplicialAbelianGroup constant(std::size_t rank, int cap);

  /// Every simplicial identity, checked as exact matrix equations.
  static bool satisfies_identities(const std::vector<std::size_t>& ranks,
                                   const std::vector<std::vector<IntMatrix>>& faces,
                                   const std::vector<std::vector<IntMatrix>>& degeneracies);

  int cap() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const { return ranks_[static_cast<std::size_t>(n)]; }
  const IntMatrix& face(int n, int i) const { return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]; }
  const IntMatrix& degeneracy(int n, int j) const {
    return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
  }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::vector<std::vector<IntMatrix>>& faces() const { return faces_; }
  const std::vector<std::vector<IntMatrix>>& degeneracies() const { return degeneracies_; }

 private:
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<IntMatrix>> faces_;
  std::vector<std::vector<IntMatrix>> degeneracies_;
};

/// Degrees > 0 unchanged, degree 0 replaced by the cycles ker ∂_0, negative
/// degrees dropped. H_n is preserved for n >= 0.
ChainComplex truncate_nonneg(const ChainComplex& c);

/// K(c)_n = ⊕_{η: [n] ->> [k]} c_k up to dimension cap. A monotone θ acts on
/// the summand of η by factoring η∘θ = δ∘η': identity into η' when δ is the
/// identity, ∂ into η' when δ = δ⁰, zero otherwise. Throws InvalidArgument
/// if c has negative degrees.
SimplicialAbelianGroup dold_kan_K(const ChainComplex& c, int cap);

/// Summand order of K(c)_n: the surjections [n] ->> [k] for k = 0..n, each
/// in lexicographic order, paired with its offset.
struct KSummand {
  MonotoneMap eta;
  std::size_t offset = 0;
};
std::vector<KSummand> dold_kan_summands(const ChainComplex& c, int n);

/// N_n = ∩_{i >= 1} ker d_i with differential d_0, in degrees 0..cap, on a
/// chosen basis of each N_n.
ChainComplex moore_normalized(const SimplicialAbelianGroup& a);

/// The inclusion of c (cut off above cap) into moore_normalized(K(c)) as
/// the summands of identity surjections. An isomorphism of complexes.
ChainMap dold_kan_unit(const ChainComplex& c, int cap);

/// H_n of the Moore complex; needs cap >= n + 1.
HomologyGroup simplicial_homotopy_group(const SimplicialAbelianGroup& a, int n);

/// π_n K(truncate_nonneg(c)) with cap n + 2.
HomologyGroup map_homotopy_groups(const ChainComplex& c, int n);

}  // namespace simpcalc
