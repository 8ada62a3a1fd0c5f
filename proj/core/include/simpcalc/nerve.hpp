#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "simpcalc/simplicial_set.hpp"

namespace simpcalc {

/// A category with finitely many objects and morphisms, given by its full
/// composition table.
class FiniteCategory {
 public:
  struct Morphism {
    std::string name;
    int source = 0;
    int target = 0;
  };

  /// composition[g][f] is g ∘ f when target(f) == source(g), and -1
  /// otherwise. Validates shapes, units and associativity.
  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms, std::vector<int> identities,
                 std::vector<std::vector<int>> composition);

  /// The preorder on `objects` with x -> y iff leq(x, y). Throws unless
  /// leq is reflexive and transitive.
  static FiniteCategory preorder(std::vector<std::string> objects, const std::function<bool(int, int)>& leq);
  /// The ordinal [n] = {0 < 1 < ... < n}.
  static FiniteCategory ordinal(int n);
  /// [1] × [1], objects "00", "10", "01", "11" (first coordinate first).
  static FiniteCategory square();

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object(int x) const { return objects_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const Morphism& morphism(int m) const { return morphisms_[static_cast<std::size_t>(m)]; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  int identity(int x) const { return identities_[static_cast<std::size_t>(x)]; }
  bool is_identity(int m) const;
  /// g ∘ f; throws if not composable.
  int compose(int g, int f) const;
  /// The unique morphism x -> y in a thin category, if any.
  std::optional<int> arrow(int x, int y) const;
  /// At most one morphism between any two objects.
  bool is_thin() const;
  int object_index(std::string_view name) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> composition_;
};

/// Default truncation for nerves: object count + 2.
int default_nerve_dimension(const FiniteCategory& c);

/// N(C) up to dimension d. Nondegenerate k-simplices are strings of k
/// composable non-identity morphisms. In a thin category a string is
/// named by its objects ("a<b<c"); otherwise by its morphisms ("f|g").
FiniteSSet nerve(const FiniteCategory& c, std::optional<int> d = std::nullopt);

/// Nerve of the preorder leq on the given objects.
FiniteSSet nerve_preorder(std::vector<std::string> objects, const std::function<bool(int, int)>& leq,
                          std::optional<int> d = std::nullopt);

}  // namespace simpcalc
