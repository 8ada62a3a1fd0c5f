#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simpcalc/simplicial_set.hpp"

namespace simpcalc {

/// Every simplex of X up to dimension `top`, degenerate ones included, with
/// index tables for faces and degeneracies. Levels are sorted, so indices
/// are deterministic.
class SimplexTable {
 public:
  SimplexTable(FiniteSSet x, int top);

  const FiniteSSet& space() const { return space_; }
  int top() const { return static_cast<int>(levels_.size()) - 1; }
  std::span<const Simplex> level(int n) const { return levels_[static_cast<std::size_t>(n)]; }
  std::size_t level_size(int n) const { return levels_[static_cast<std::size_t>(n)].size(); }
  int index(const Simplex& x) const;
  const Simplex& at(int n, int idx) const { return levels_[static_cast<std::size_t>(n)][static_cast<std::size_t>(idx)]; }
  /// d_i of element idx of level n (n >= 1).
  int face(int n, int idx, int i) const {
    return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(idx) * static_cast<std::size_t>(n + 1) +
                                               static_cast<std::size_t>(i)];
  }
  /// s_j of element idx of level n, an index into level n+1 (n < top).
  int degeneracy(int n, int idx, int j) const {
    return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(idx) * static_cast<std::size_t>(n + 1) +
                                                      static_cast<std::size_t>(j)];
  }

 private:
  FiniteSSet space_;
  std::vector<std::vector<Simplex>> levels_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> degeneracies_;
};

/// A simplicial set given levelwise by finite sets with face and degeneracy
/// tables, up to dimension `sizes.size() - 1`.
struct LevelwiseSet {
  std::vector<std::size_t> sizes;
  /// faces[n][x * (n + 1) + i] for n >= 1; faces[0] is unused.
  std::vector<std::vector<int>> faces;
  /// degeneracies[n][x * (n + 1) + j] for n < top; indices into level n+1.
  std::vector<std::vector<int>> degeneracies;
  /// Name for a nondegenerate element x of level n.
  std::function<std::string(int n, int x)> name;
  std::optional<int> basepoint;
};

struct ExtractedSet {
  FiniteSSet space;
  /// normal_forms[n][x] is element x of level n as a simplex of `space`.
  std::vector<std::vector<Simplex>> normal_forms;
};

/// Finds the nondegenerate elements (those outside the image of every
/// degeneracy) and presents the result in normal form.
ExtractedSet extract(const LevelwiseSet& levels);

/// Name of the face of Δⁿ spanned by the given vertices: "012", or "0.1.12"
/// once n >= 10.
std::string simplex_cell_name(std::span<const int> vertices, int n);
/// Vertices of a Δⁿ cell name, the inverse of simplex_cell_name.
std::vector<int> simplex_cell_vertices(std::string_view name, int n);

FiniteSSet standard_simplex(int n);
/// The simplex of Δⁿ with the given nondecreasing vertex sequence.
Simplex simplex_with_vertices(const FiniteSSet& delta_n, int n, std::span<const int> vertices);
/// θ_*: Δᵐ -> Δⁿ for θ: [m] -> [n], between the given standard simplices.
SSetMap simplex_map(const MonotoneMap& theta, const FiniteSSet& delta_m, const FiniteSSet& delta_n);
SSetMap simplex_map(const MonotoneMap& theta);
/// Δ⁰, with its vertex "0" as basepoint.
FiniteSSet point();

/// A simplicial subset of an ambient simplicial set, given by the set of
/// nondegenerate cells it contains (closed under faces).
class SimplicialSubset {
 public:
  /// Throws InvalidArgument unless `members` is closed under faces.
  SimplicialSubset(FiniteSSet ambient, std::vector<bool> members);

  /// The smallest simplicial subset containing the generators.
  static SimplicialSubset closure(FiniteSSet ambient, std::span<const int> generators);
  static SimplicialSubset closure(FiniteSSet ambient, std::span<const std::string> generator_names);
  static SimplicialSubset whole(FiniteSSet ambient);
  static SimplicialSubset image(const SSetMap& f);

  const FiniteSSet& ambient() const { return ambient_; }
  bool contains(int id) const { return members_[static_cast<std::size_t>(id)]; }
  bool contains(const Simplex& x) const { return contains(x.base); }
  const std::vector<bool>& members() const { return members_; }
  std::vector<int> ids() const;
  std::size_t size() const;
  bool is_empty() const { return size() == 0; }

  /// The subset as a simplicial set in its own right; cell names are kept
  /// and so is the basepoint when it lies in the subset.
  FiniteSSet materialize() const;
  /// materialize() ↪ ambient.
  SSetMap inclusion() const;

  friend bool operator==(const SimplicialSubset&, const SimplicialSubset&) = default;

 private:
  FiniteSSet ambient_;
  std::vector<bool> members_;
};

/// Both throw InvalidArgument when the ambients differ.
SimplicialSubset intersection(const SimplicialSubset& u, const SimplicialSubset& v);
SimplicialSubset union_of(const SimplicialSubset& u, const SimplicialSubset& v);

/// Λⁿᵢ ⊂ Δⁿ, the closure of every facet except the one opposite i.
SimplicialSubset horn_subset(int n, int i);
FiniteSSet horn(int n, int i);
/// ∂Δⁿ ⊂ Δⁿ, the closure of all facets; it is the (n-1)-sphere. Empty for n = 0.
SimplicialSubset boundary_subset(int n);
FiniteSSet boundary(int n);

/// The constant map X -> Y at a vertex of Y.
SSetMap constant_map(const FiniteSSet& x, const FiniteSSet& y, int vertex);
/// Δ⁰ -> Y picking a vertex.
SSetMap vertex_inclusion(const FiniteSSet& y, int vertex);

class Product {
 public:
  const FiniteSSet& space() const { return extracted_->space; }
  const SSetMap& first() const { return *first_; }
  const SSetMap& second() const { return *second_; }
  const FiniteSSet& left() const { return left_->space(); }
  const FiniteSSet& right() const { return right_->space(); }
  /// The simplex (a, b) of the product; a and b must have equal dimension
  /// within the computed range.
  Simplex pair(const Simplex& a, const Simplex& b) const;
  /// Highest dimension computed.
  int top() const { return top_; }

 private:
  friend Product product(const FiniteSSet&, const FiniteSSet&, std::optional<int>);
  std::shared_ptr<const SimplexTable> left_, right_;
  std::shared_ptr<const ExtractedSet> extracted_;
  std::shared_ptr<const SSetMap> first_, second_;
  int top_ = -1;
};

/// X × Y with its projections. Nondegenerate cells are named "(a,b)" after
/// their coordinates. max_dim truncates the result. Pointed when both
/// factors are.
Product product(const FiniteSSet& x, const FiniteSSet& y, std::optional<int> max_dim = std::nullopt);

/// W -> X × Y with components f and g.
SSetMap pairing(const SSetMap& f, const SSetMap& g, const Product& target);
/// f × g between products.
SSetMap product_map(const SSetMap& f, const SSetMap& g, const Product& source, const Product& target);

struct Coproduct {
  FiniteSSet space;
  std::vector<SSetMap> inclusions;
};

/// Disjoint union; cells of part k are renamed prefixes[k] + name.
Coproduct coproduct(std::span<const FiniteSSet> parts, std::span<const std::string> prefixes);

struct Quotient {
  FiniteSSet space;
  SSetMap projection;
};

/// X modulo the simplicial equivalence relation generated by the given
/// pairs of equal-dimensional simplices. Classes are named after their
/// least member; the basepoint is the class of X's basepoint.
Quotient quotient_by(const FiniteSSet& x, std::span<const std::pair<Simplex, Simplex>> generators);
/// X/A with A collapsed to a vertex named "*", which becomes the basepoint.
Quotient quotient(const SimplicialSubset& a);

struct Pushout {
  FiniteSSet space;
  SSetMap left;   // U -> P
  SSetMap right;  // V -> P
  Coproduct coproduct;
  Quotient quotient;
};

/// U ⊔_W V for f: W -> U and g: W -> V. Cells are prefixed "U:" and "V:".
Pushout pushout(const SSetMap& f, const SSetMap& g);

struct Pullback {
  FiniteSSet space;
  SSetMap first;   // P -> A
  SSetMap second;  // P -> B
};

/// A ×_Z B for p: A -> Z and q: B -> Z, computed inside A × B.
Pullback pullback(const SSetMap& p, const SSetMap& q, std::optional<int> max_dim = std::nullopt);

}  // namespace simpcalc
