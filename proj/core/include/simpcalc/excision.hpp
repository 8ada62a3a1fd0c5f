#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "simpcalc/chain_complex.hpp"
#include "simpcalc/constructions.hpp"
#include "simpcalc/homology.hpp"
#include "simpcalc/simplicial_set.hpp"

namespace simpcalc {

/// X × Δ¹ with the inclusion of X at the given end (0 or 1).
SSetMap cylinder_end(const Product& cylinder, int end);

/// (X × Δ¹)/(X × {1}), pointed at the cone vertex "*". cone(∅) is a point.
FiniteSSet cone(const FiniteSSet& x);

/// X × Δ¹ with both ends collapsed separately; pointed at the bottom vertex.
/// The suspension of ∅ is ∂Δ¹.
FiniteSSet unreduced_suspension(const FiniteSSet& x);

struct Suspension {
  FiniteSSet space;
  Product cylinder;  // X × Δ¹
  Quotient quotient;  // cylinder -> space
};

/// (X × Δ¹)/(X × ∂Δ¹ ∪ * × Δ¹) with the collapsed vertex "*" as basepoint.
/// Throws InvalidArgument if X is not pointed.
Suspension reduced_suspension_data(const FiniteSSet& x);
FiniteSSet reduced_suspension(const FiniteSSet& x);

/// A map out of a quotient, given on the quotiented set. Throws
/// InvalidArgument unless h is constant on the classes.
SSetMap descend(const Quotient& q, const SSetMap& h);

struct DoubleMappingCylinder {
  FiniteSSet space;
  SSetMap f;  // W -> U
  SSetMap g;  // W -> V
  Product cylinder;  // W × Δ¹
  Coproduct coproduct;  // U ⊔ W × Δ¹ ⊔ V, prefixed "U:", "C:", "V:"
  Quotient quotient;
  SSetMap from_u;
  SSetMap from_v;
  Pushout pushout;
  SSetMap comparison;  // space -> pushout.space, collapsing the cylinder coordinate
};

/// (U ⊔ W × Δ¹ ⊔ V)/(f(w) ~ (w,0), (w,1) ~ g(w)). Throws InvalidArgument if
/// the sources differ.
DoubleMappingCylinder double_mapping_cylinder(const SSetMap& f, const SSetMap& g);

/// The map from the double mapping cylinder of (f, g) induced by p: U -> T
/// and q: V -> T with p f = q g. Throws NonCommutingDiagram otherwise.
SSetMap cylinder_map(const DoubleMappingCylinder& d, const SSetMap& p, const SSetMap& q);

/// A strictly commuting square W -> U, W -> V, U -> X, V -> X.
struct SSetSquare {
  SSetMap f;  // W -> U
  SSetMap g;  // W -> V
  SSetMap p;  // U -> X
  SSetMap q;  // V -> X

  /// Throws InvalidArgument if the corners do not match up and
  /// NonCommutingDiagram if p f != q g.
  SSetSquare(SSetMap f, SSetMap g, SSetMap p, SSetMap q);

  const FiniteSSet& w() const { return f.source(); }
  const FiniteSSet& u() const { return f.target(); }
  const FiniteSSet& v() const { return g.target(); }
  const FiniteSSet& x() const { return p.target(); }
};

/// The strict pushout square of f and g.
SSetSquare pushout_square(const SSetMap& f, const SSetMap& g);
/// Every corner X, every map the identity.
SSetSquare identity_square(const FiniteSSet& x);
/// ∂Δ¹ -> Δ⁰, ∂Δ¹ ↪ Δ¹, into Δ¹/∂Δ¹.
SSetSquare circle_square();
/// ∂Δ¹ -> Δ⁰ twice, into Δ¹/∂Δ¹ at the basepoint.
SSetSquare collapsed_circle_square();
/// ∂Δ¹ -> Δ⁰ twice, into Δ⁰.
SSetSquare collapsed_point_square();

/// The double mapping cylinder maps to the corner by a homology isomorphism.
bool is_homology_pushout(const SSetSquare& s);

/// Normalized chains applied to the square.
ChainSquare chain_square(const SSetSquare& s);

struct ExcisionReport {
  bool homology_pushout = false;
  bool chain_bicartesian = false;
  /// Pushout squares go to bicartesian squares.
  bool consistent() const { return !homology_pushout || chain_bicartesian; }
};

ExcisionReport excision_check(const SSetSquare& s);

/// Subcomplexes U, V of X with U ∪ V = X and W = U ∩ V.
class CoverData {
 public:
  /// Throws InvalidArgument unless U and V live in the same ambient and
  /// cover it.
  CoverData(SimplicialSubset u, SimplicialSubset v);
  /// U and V as closures of named cells of X.
  static CoverData from_names(const FiniteSSet& x, std::span<const std::string> u, std::span<const std::string> v);

  const FiniteSSet& x() const { return u_.ambient(); }
  const SimplicialSubset& u() const { return u_; }
  const SimplicialSubset& v() const { return v_; }
  const SimplicialSubset& w() const { return w_; }

  SSetMap w_to_u() const;
  SSetMap w_to_v() const;
  SSetMap u_to_x() const;
  SSetMap v_to_x() const;

 private:
  SimplicialSubset u_;
  SimplicialSubset v_;
  SimplicialSubset w_;
};

/// A ⊂ B as a map between the materialized subsets.
SSetMap subset_inclusion(const SimplicialSubset& a, const SimplicialSubset& b);

/// 0 -> N(W) -> N(U) ⊕ N(V) -> N(X) -> 0 with alpha = (i_WU, i_WV) and
/// beta = i_UX - i_VX.
struct CoverSequence {
  ChainComplex w;
  ChainComplex sum;
  ChainComplex x;
  ChainMap alpha;
  ChainMap beta;
  /// Exactness at W, U ⊕ V and X in every degree.
  ExactnessReport exactness;

  bool exact() const { return exactness.all_exact(); }
};

CoverSequence cover_short_exact_sequence(const CoverData& cd);

/// Both arcs of ∂Δ², meeting in two vertices: U = {01, 12}, V = {02}.
CoverData two_arc_cover();

/// Homology evidence around the square ∂Δ¹ -> Δ⁰, ∂Δ¹ ↪ Δ¹ over Δ¹/∂Δ¹: a
/// pushout whose pullback has two components while the loops of the
/// corner form ℤ.
struct CounterexampleReport {
  std::size_t pullback_h0_rank = 0;
  bool pullback_is_s0 = false;
  HomologyGroup corner_h1;
  bool square_is_pushout = false;
  ExcisionReport excision;

  /// |π₀| of the strict pullback is finite while H₁ of the corner is not.
  bool cardinalities_differ() const { return corner_h1.rank > 0; }
};

CounterexampleReport identity_counterexample_report();

}  // namespace simpcalc
