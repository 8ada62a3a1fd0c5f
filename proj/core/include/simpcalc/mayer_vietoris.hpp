#pragma once

#include <string>
#include <vector>

#include "simpcalc/chain_complex.hpp"
#include "simpcalc/excision.hpp"
#include "simpcalc/homology.hpp"
#include "simpcalc/integer_matrix.hpp"

namespace simpcalc {

enum class LesPosition { x_shifted, w, sum, x };

/// "X-shifted", "W", "U+V", "X".
std::string to_string(LesPosition p);

struct LesEntry {
  int degree = 0;
  LesPosition position = LesPosition::w;
  HomologyGroup group;
};

/// H_{top+1}(X) -> H_top(W) -> H_top(U ⊕ V) -> H_top(X) -> H_{top-1}(W) -> ...
/// -> H_0(X) -> 0, with maps in the generators of HomologyPresentation.
struct LongExactSequence {
  std::vector<LesEntry> entries;
  /// maps[k]: entries[k] -> entries[k+1].
  std::vector<IntMatrix> maps;
  /// exact_at[k] for every entry; the first entry has no incoming map and is
  /// recorded as exact. The last is checked against the zero map.
  std::vector<bool> exact_at;

  bool exact() const;
};

/// The long exact sequence of 0 -> A -> B -> C -> 0 (alpha, beta) in degrees
/// 0..top, connecting maps by the snake construction. Throws InvalidArgument
/// if a lift needed by the snake construction does not exist.
LongExactSequence long_exact_sequence(const ChainMap& alpha, const ChainMap& beta, int top);

/// H_{n+1}(C) -> H_n(A): lift a cycle through beta, take its boundary and
/// pull it back along alpha.
IntMatrix connecting_map(const ChainMap& alpha, const ChainMap& beta, int n);

LongExactSequence mayer_vietoris(const CoverData& cd, int top);

/// im(in) = ker(out) in the middle group, everything in homology
/// coordinates; tested by lattice membership with the torsion relations
/// adjoined.
bool is_exact_at(const IntMatrix& in, const HomologyGroup& middle, const IntMatrix& out, const HomologyGroup& target);

}  // namespace simpcalc
