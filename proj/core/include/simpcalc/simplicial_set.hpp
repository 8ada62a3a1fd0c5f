#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simpcalc/delta.hpp"

namespace simpcalc {

/// An element of X_dim in Eilenberg–Zilber normal form: s_{j_1} ... s_{j_k} y
/// with j_1 > ... > j_k and y the nondegenerate cell `base`.
struct Simplex {
  int base = -1;
  std::vector<int> degeneracies;
  int dim = 0;

  static Simplex cell(int base, int dim) { return Simplex{base, {}, dim}; }

  bool is_degenerate() const { return !degeneracies.empty(); }
  int base_dim() const { return dim - static_cast<int>(degeneracies.size()); }
  /// The surjection [dim] ->> [base_dim] carrying the degeneracies.
  MonotoneMap surjection() const;
  /// s_j of this simplex.
  Simplex degenerate(int j) const;
  /// eta^* of this simplex, for a surjection eta: [m] ->> [dim].
  Simplex pull_back_along(const MonotoneMap& eta) const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// A finitely presented simplicial set: its nondegenerate cells together
/// with their faces in normal form. Immutable and cheap to copy.
///
/// Cell ids are canonical: cells are ordered by (dimension, name), so the
/// cells of one dimension occupy a contiguous id range.
class FiniteSSet {
 public:
  struct Cell {
    std::string name;
    int dim = 0;
    std::vector<Simplex> faces;  // d_0 ... d_dim, empty for vertices

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  class Builder {
   public:
    /// Returns a provisional id used to refer to the cell in later faces.
    int add(std::string name, int dim, std::vector<Simplex> faces = {});
    void set_basepoint(int provisional_id) { basepoint_ = provisional_id; }
    std::size_t size() const { return cells_.size(); }

    /// Validates names, face shapes and every simplicial identity, then
    /// renumbers cells canonically. Throws InvalidArgument on failure.
    FiniteSSet build() &&;
    /// As build(); also returns the canonical id of every provisional id.
    std::pair<FiniteSSet, std::vector<int>> build_with_ids() &&;

   private:
    std::vector<Cell> cells_;
    std::optional<int> basepoint_;
  };

  FiniteSSet();

  int top_dim() const;  // -1 for the empty simplicial set
  std::size_t size() const;
  std::size_t count(int k) const;
  /// Nondegenerate cell counts in dimensions 0..top_dim.
  std::vector<std::size_t> counts() const;

  const Cell& cell(int id) const;
  std::span<const Cell> cells() const;
  int first_of_dim(int k) const;
  auto ids_of_dim(int k) const { return std::views::iota(first_of_dim(k), first_of_dim(k + 1)); }
  std::optional<int> find(std::string_view name) const;
  /// Throws InvalidArgument if absent.
  int id_of(std::string_view name) const;

  std::optional<int> basepoint() const;
  bool is_pointed() const { return basepoint().has_value(); }
  FiniteSSet with_basepoint(std::optional<int> vertex) const;

  Simplex simplex(int id) const { return Simplex::cell(id, cell(id).dim); }
  Simplex face(const Simplex& x, int i) const;
  /// theta^* x for a monotone theta: [m] -> [x.dim].
  Simplex apply(const MonotoneMap& theta, const Simplex& x) const;
  /// The vertex theta^* x for theta: [0] -> [dim] hitting k.
  Simplex vertex(const Simplex& x, int k) const;

  /// Every simplex of dimension n, degenerate ones included, sorted.
  std::vector<Simplex> simplices(int n) const;
  std::size_t simplex_count(int n) const;

  /// Checks that a Simplex refers to this set and is well-formed.
  bool is_valid(const Simplex& x) const;
  /// "name" for cells, "s1s0:name" for degenerate simplices.
  std::string format(const Simplex& x) const;
  /// Inverse of format.
  Simplex parse(std::string_view text) const;

  friend bool operator==(const FiniteSSet& a, const FiniteSSet& b);

 private:
  struct Data;
  explicit FiniteSSet(std::shared_ptr<const Data> data);
  Simplex restrict_cell(int base, const MonotoneMap& mono) const;

  std::shared_ptr<const Data> data_;
};

/// A simplicial map, recorded by the image of every nondegenerate cell.
class SSetMap {
 public:
  struct Unchecked {};

  /// Validates dimensions, face compatibility and basepoints.
  SSetMap(FiniteSSet source, FiniteSSet target, std::vector<Simplex> images);
  SSetMap(Unchecked, FiniteSSet source, FiniteSSet target, std::vector<Simplex> images);

  static SSetMap identity(const FiniteSSet& x);
  /// Builds a map from images given per source cell name.
  static SSetMap from_names(const FiniteSSet& source, const FiniteSSet& target,
                            const std::map<std::string, std::string>& images);

  const FiniteSSet& source() const { return source_; }
  const FiniteSSet& target() const { return target_; }
  const std::vector<Simplex>& images() const { return images_; }
  const Simplex& image_of_cell(int id) const { return images_[static_cast<std::size_t>(id)]; }
  Simplex operator()(const Simplex& x) const;

  /// Injective on simplices of every dimension.
  bool is_injective() const;
  /// Sends nondegenerate cells bijectively onto nondegenerate cells.
  bool is_isomorphism() const;

  friend bool operator==(const SSetMap& a, const SSetMap& b);

 private:
  FiniteSSet source_;
  FiniteSSet target_;
  std::vector<Simplex> images_;
};

/// g ∘ f.
SSetMap compose(const SSetMap& g, const SSetMap& f);

}  // namespace simpcalc
