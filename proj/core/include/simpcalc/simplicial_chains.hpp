#pragma once

#include "simpcalc/chain_complex.hpp"
#include "simpcalc/simplicial_set.hpp"

namespace simpcalc {

/// Normalized chains: degree n has the nondegenerate n-simplices as basis
/// (in id order) and ∂ = Σ (-1)^i d_i, with degenerate faces dropped.
ChainComplex normalized_chains(const FiniteSSet& x);
/// Normalized chains modulo the basepoint. Throws InvalidArgument if x is
/// not pointed.
ChainComplex reduced_normalized_chains(const FiniteSSet& x);

/// Basis position of a nondegenerate cell in normalized_chains.
std::size_t chain_index(const FiniteSSet& x, int cell);

ChainMap chain_map(const SSetMap& f);
/// Requires both sides pointed and f basepoint-preserving.
ChainMap reduced_chain_map(const SSetMap& f);

}  // namespace simpcalc
