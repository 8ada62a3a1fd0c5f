#pragma once

#include <compare>
#include <span>
#include <vector>

namespace simpcalc {

/// A morphism [dom] -> [cod] of the simplex category: a nondecreasing map of
/// finite ordinals, stored as its value table.
class MonotoneMap {
 public:
  /// values.size() == dom + 1, every value <= cod, nondecreasing.
  MonotoneMap(int cod, std::vector<int> values);

  static MonotoneMap identity(int n);
  /// The i-th coface [n-1] -> [n], whose image misses i.
  static MonotoneMap coface(int n, int i);
  /// The i-th codegeneracy [n+1] -> [n], which hits i twice.
  static MonotoneMap codegeneracy(int n, int i);
  /// Constant map [dom] -> [cod] with the given value.
  static MonotoneMap constant(int dom, int cod, int value);

  int dom() const { return static_cast<int>(values_.size()) - 1; }
  int cod() const { return cod_; }
  int operator()(int k) const { return values_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& values() const { return values_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const;

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  int cod_ = 0;
  std::vector<int> values_;
};

/// f ∘ g. Requires cod(g) == dom(f).
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

/// f = mono ∘ epi. The degeneracy word lists the indices j with
/// epi(j) == epi(j+1) in decreasing order (the Eilenberg–Zilber word
/// s_{j_1} ... s_{j_k}); the face word lists the values missed by mono in
/// increasing order, so mono = δ^{i_r} ∘ ... ∘ δ^{i_1}.
struct EpiMonoFactorization {
  std::vector<int> degeneracies;
  std::vector<int> faces;
  MonotoneMap epi;
  MonotoneMap mono;
};

EpiMonoFactorization epi_mono_factor(const MonotoneMap& f);

/// The surjection [dim] ->> [dim - k] whose degeneracy word is `word`
/// (strictly decreasing indices in [0, dim-1]).
MonotoneMap surjection_from_word(int dim, std::span<const int> word);
/// Inverse of surjection_from_word.
std::vector<int> degeneracy_word(const MonotoneMap& surjection);
/// The injection [dom] -> [cod] whose image misses exactly `missing`.
MonotoneMap injection_missing(int cod, std::span<const int> missing);

/// Every monotone map [n] -> [m], in lexicographic order of value tables.
std::vector<MonotoneMap> monotone_maps(int n, int m);
std::vector<MonotoneMap> injections(int n, int m);
std::vector<MonotoneMap> surjections(int n, int m);

/// Binomial coefficient, exact for the small arguments used here.
long long binomial(int n, int k);

}  // namespace simpcalc
