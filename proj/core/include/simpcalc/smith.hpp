#pragma once

#include <optional>
#include <vector>

#include "simpcalc/integer_matrix.hpp"

namespace simpcalc {

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
/// all d_i > 0, zeros after position r = rank.
struct SmithDecomposition {
  IntMatrix left;           // U
  IntMatrix diagonal;       // D
  IntMatrix right;          // V
  IntMatrix left_inverse;   // U^{-1}
  IntMatrix right_inverse;  // V^{-1}
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 | ... | d_rank.
  IntVector invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Nonzero invariant factors only, without tracking the transforms.
IntVector invariant_factors(const IntMatrix& m);
std::size_t matrix_rank(const IntMatrix& m);

/// Columns form a basis of ker(m) in Z^cols. The basis spans a saturated lattice.
IntMatrix kernel_basis(const IntMatrix& m);

/// Integer solution x of a * x = b, if one exists.
std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b);
/// Column-wise solve; nullopt if any column fails.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

/// L with L * basis = I, for a full-column-rank matrix whose column span is
/// saturated. Throws InvalidArgument otherwise.
IntMatrix left_inverse(const IntMatrix& basis);

/// Square with determinant +-1.
bool is_unimodular(const IntMatrix& m);

/// Injective with every invariant factor equal to 1, i.e. split injective
/// with free cokernel.
bool is_split_injective(const IntMatrix& m);

}  // namespace simpcalc
