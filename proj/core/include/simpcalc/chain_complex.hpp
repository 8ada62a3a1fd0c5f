#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "simpcalc/integer_matrix.hpp"

namespace simpcalc {

/// A bounded complex of free abelian groups of finite rank, supported in
/// degrees low..high. ∂_n: C_n -> C_{n-1} is a rank(n-1) × rank(n) matrix.
class ChainComplex {
 public:
  /// The zero complex.
  ChainComplex() = default;
  /// boundaries[k] is ∂ in degree low + k; ∂_low must have zero rows.
  /// Validates shapes and ∂∂ = 0.
  ChainComplex(int low, std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

  /// ℤ^rank in a single degree.
  static ChainComplex concentrated(int degree, std::size_t rank = 1);

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const;
  /// ∂_n, a zero matrix of the right shape outside the window.
  IntMatrix boundary(int n) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// Every group is zero.
  bool is_zero() const;

  /// Equal groups and boundaries in every degree.
  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  int low_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> boundaries_;
};

/// A chain map, given by one target.rank(n) × source.rank(n) block per
/// degree; missing degrees are zero.
class ChainMap {
 public:
  /// Validates shapes and ∂f = f∂.
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> blocks);

  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  IntMatrix block(int n) const;
  /// Degrees in which either side is nonzero.
  int low() const;
  int high() const;
  bool is_zero() const;

  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, IntMatrix> blocks_;
};

/// g ∘ f.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a);
ChainMap operator-(const ChainMap& a, const ChainMap& b);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
/// a -> a ⊕ b, b -> a ⊕ b, a ⊕ b -> a, a ⊕ b -> b.
ChainMap first_inclusion(const ChainComplex& a, const ChainComplex& b);
ChainMap second_inclusion(const ChainComplex& a, const ChainComplex& b);
ChainMap first_projection(const ChainComplex& a, const ChainComplex& b);
ChainMap second_projection(const ChainComplex& a, const ChainComplex& b);
/// (f, g): a -> b ⊕ c.
ChainMap map_into_sum(const ChainMap& f, const ChainMap& g);
/// [f g]: a ⊕ b -> c.
ChainMap map_from_sum(const ChainMap& f, const ChainMap& g);

/// (Ωc)_n = c_{n+1}, with the same boundary matrices.
ChainComplex loop_shift(const ChainComplex& c, int times = 1);
/// Ω applied to a chain map.
ChainMap loop_shift(const ChainMap& f, int times = 1);

/// cone(f)_n = target_n ⊕ source_{n-1}, ∂(t, s) = (∂t + f s, -∂s).
ChainComplex mapping_cone(const ChainMap& f);

bool is_acyclic(const ChainComplex& c);
/// The mapping cone is acyclic.
bool quasi_iso(const ChainMap& f);
/// Degreewise unimodular.
bool is_isomorphism(const ChainMap& f);

/// A strictly commuting square W -> U, W -> V, U -> X, V -> X.
struct ChainSquare {
  ChainMap w_to_u;
  ChainMap w_to_v;
  ChainMap u_to_x;
  ChainMap v_to_x;

  /// Throws NonCommutingDiagram unless the two composites W -> X agree, and
  /// InvalidArgument if the corners do not match up.
  ChainSquare(ChainMap w_to_u, ChainMap w_to_v, ChainMap u_to_x, ChainMap v_to_x);

  const ChainComplex& w() const { return w_to_u.source(); }
  const ChainComplex& u() const { return w_to_u.target(); }
  const ChainComplex& v() const { return w_to_v.target(); }
  const ChainComplex& x() const { return u_to_x.target(); }
};

/// The iterated cone of W -> U ⊕ V -> X: degree n is
/// X_n ⊕ U_{n-1} ⊕ V_{n-1} ⊕ W_{n-2}.
ChainComplex total_complex(const ChainSquare& s);
/// Total complex acyclic.
bool is_homotopy_bicartesian(const ChainSquare& s);

struct ExactnessEntry {
  std::size_t slot = 0;  // object index between maps[slot-1] and maps[slot]
  int degree = 0;
  bool exact = false;
};

struct ExactnessReport {
  std::vector<ExactnessEntry> entries;
  bool all_exact() const;
  /// Exact at the slot in every checked degree.
  bool exact_at(std::size_t slot) const;
};

/// Checks im = ker at every inner object of the sequence maps[0], maps[1],
/// ... in degrees low..high. Throws NonZeroComposite if some consecutive
/// composite is nonzero, InvalidArgument if maps are not composable.
ExactnessReport check_exact_sequence(const std::vector<ChainMap>& maps, int low, int high);

/// A sequential diagram stages[0] -> stages[1] -> ...
struct Tower {
  std::vector<ChainComplex> stages;
  std::vector<ChainMap> maps;

  /// Validates that maps[k] goes from stages[k] to stages[k+1].
  Tower(std::vector<ChainComplex> stages, std::vector<ChainMap> maps);
};

enum class Stabilization { zero_tail, isomorphisms, quasi_isomorphisms };

struct ColimitResult {
  ChainComplex value;
  std::size_t index = 0;  // the first stable stage
  Stabilization kind = Stabilization::zero_tail;
};

/// The colimit of a tower that is stable from some stage k <= probe on:
/// either every later stage is zero, or every later map is an isomorphism
/// (the value is stage k) or a quasi-isomorphism (the value is stage k up to
/// quasi-isomorphism). At least one map of the tail must be present.
/// Throws NoStabilization otherwise.
ColimitResult sequential_colimit(const Tower& t, std::size_t probe);

/// A real chain on a basis of simplices.
struct RealChain {
  std::vector<std::pair<int, double>> coefficients;

  /// Throws InvalidArgument if a basis id repeats.
  explicit RealChain(std::vector<std::pair<int, double>> coefficients = {});
};

double l1_norm(const RealChain& chain);
/// Operator norm of ∂_n for the ℓ¹-norms: the largest column ℓ¹-mass.
Integer boundary_operator_norm(const ChainComplex& c, int n);

}  // namespace simpcalc
