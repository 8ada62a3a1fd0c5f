#pragma once

#include <map>
#include <string>
#include <vector>

#include "simpcalc/chain_complex.hpp"
#include "simpcalc/excision.hpp"
#include "simpcalc/nerve.hpp"
#include "simpcalc/serialization.hpp"
#include "simpcalc/simplicial_set.hpp"
#include "simpcalc/tower.hpp"

namespace simpcalc::cli {

/// {"objects": [...], "order": [[a, b], ...]} for the preorder generated by
/// the pairs, or {"objects", "morphisms": [{"name", "source", "target"}],
/// "identities": [...], "composition": [[g, f, g∘f], ...]}.
FiniteCategory category_from_json(const Json& j);

/// Named objects, plus the builtin vocabulary:
///   spaces   point, circle, s0, square, simplexN, boundaryN, hornN_I,
///            sphereN, ordinalN, a path to a .json file; a suffix "@v"
///            points the space at vertex v
///   covers   two-arc, square-halves, degenerate-circle, retract,
///            interval-vertex
///   squares  circle, collapsed-circle, collapsed-point, identity:<space>
///   evaluators reduced_chains (or chains), unreduced_chains, l1_mock
/// Names defined in the workspace take precedence.
class Workspace {
 public:
  FiniteSSet space(const std::string& spec) const;
  CoverData cover(const std::string& spec) const;
  SSetSquare square(const std::string& spec) const;
  ChainComplex complex(const std::string& spec) const;
  static StageEvaluator evaluator(const std::string& name);

  void define_space(const std::string& name, FiniteSSet x);
  /// A space given in a manifest: a spec string, a literal simplicial set,
  /// or one of {"product": [A, B]}, {"quotient": [A, B]}, {"suspension": A},
  /// {"cone": A}, {"nerve": category}, {"pointed": [A, v]}.
  FiniteSSet build_space(const Json& j) const;
  /// {"space": S, "u": [cells], "v": [cells]} or a builtin name.
  CoverData build_cover(const Json& j) const;
  void define_cover(const std::string& name, CoverData c);
  void define_square(const std::string& name, const std::string& spec);
  void define_complex(const std::string& name, ChainComplex c);

 private:
  std::map<std::string, FiniteSSet> spaces_;
  std::map<std::string, CoverData> covers_;
  std::map<std::string, std::string> squares_;
  std::map<std::string, ChainComplex> complexes_;
};

/// X/A where A is the subset of X spanned by the cells of `sub` (matched by
/// name and checked to be the same simplicial set).
FiniteSSet quotient_by_subspace(const FiniteSSet& x, const FiniteSSet& sub);

/// The reduced suspension of a pointed space, the unreduced one otherwise.
FiniteSSet suspension(const FiniteSSet& x);

Json read_json_file(const std::string& path);

}  // namespace simpcalc::cli
