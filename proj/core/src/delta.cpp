#include "simpcalc/delta.hpp"

#include <algorithm>
#include <string>

#include "simpcalc/error.hpp"

namespace simpcalc {

MonotoneMap::MonotoneMap(int cod, std::vector<int> values) : cod_(cod), values_(std::move(values)) {
  if (cod_ < 0 || values_.empty()) throw InvalidArgument("MonotoneMap: empty source or negative target");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0 || values_[k] > cod_) {
      throw InvalidArgument("MonotoneMap: value " + std::to_string(values_[k]) + " outside [" +
                            std::to_string(cod_) + "]");
    }
    if (k > 0 && values_[k] < values_[k - 1]) throw InvalidArgument("MonotoneMap: values decrease");
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = k;
  return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw InvalidArgument("coface: index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n; ++k)
    if (k != i) v.push_back(k);
  return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw InvalidArgument("codegeneracy: index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n + 1; ++k) v.push_back(k <= i ? k : k - 1);
  return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::constant(int dom, int cod, int value) {
  return MonotoneMap(cod, std::vector<int>(static_cast<std::size_t>(dom) + 1, value));
}

bool MonotoneMap::is_injective() const {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool MonotoneMap::is_surjective() const {
  if (values_.front() != 0 || values_.back() != cod_) return false;
  for (std::size_t k = 1; k < values_.size(); ++k)
    if (values_[k] - values_[k - 1] > 1) return false;
  return true;
}

bool MonotoneMap::is_identity() const { return dom() == cod_ && is_injective(); }

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (g.cod() != f.dom()) {
    throw InvalidArgument("compose: target [" + std::to_string(g.cod()) + "] does not match source [" +
                          std::to_string(f.dom()) + "]");
  }
  std::vector<int> v(g.values().size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f(g.values()[k]);
  return MonotoneMap(f.cod(), std::move(v));
}

EpiMonoFactorization epi_mono_factor(const MonotoneMap& f) {
  // image in increasing order; epi sends k to the position of f(k) in it
  std::vector<int> image;
  std::vector<int> epi_values;
  for (int value : f.values()) {
    if (image.empty() || image.back() != value) image.push_back(value);
    epi_values.push_back(static_cast<int>(image.size()) - 1);
  }
  const int k = static_cast<int>(image.size()) - 1;
  MonotoneMap epi(k, std::move(epi_values));
  MonotoneMap mono(f.cod(), image);

  std::vector<int> missing;
  for (int v = 0, pos = 0; v <= f.cod(); ++v) {
    if (pos < static_cast<int>(image.size()) && image[static_cast<std::size_t>(pos)] == v) {
      ++pos;
    } else {
      missing.push_back(v);
    }
  }
  return EpiMonoFactorization{degeneracy_word(epi), std::move(missing), std::move(epi), std::move(mono)};
}

MonotoneMap surjection_from_word(int dim, std::span<const int> word) {
  for (std::size_t a = 0; a < word.size(); ++a) {
    if (word[a] < 0 || word[a] >= dim) throw InvalidArgument("degeneracy index out of range");
    if (a > 0 && word[a] >= word[a - 1]) throw InvalidArgument("degeneracy word is not strictly decreasing");
  }
  std::vector<int> v(static_cast<std::size_t>(dim) + 1);
  for (int t = 0; t <= dim; ++t) {
    const auto below = std::count_if(word.begin(), word.end(), [t](int j) { return j < t; });
    v[static_cast<std::size_t>(t)] = t - static_cast<int>(below);
  }
  return MonotoneMap(dim - static_cast<int>(word.size()), std::move(v));
}

std::vector<int> degeneracy_word(const MonotoneMap& surjection) {
  std::vector<int> word;
  for (int t = surjection.dom() - 1; t >= 0; --t)
    if (surjection(t) == surjection(t + 1)) word.push_back(t);
  return word;
}

MonotoneMap injection_missing(int cod, std::span<const int> missing) {
  std::vector<int> v;
  for (int k = 0; k <= cod; ++k)
    if (std::find(missing.begin(), missing.end(), k) == missing.end()) v.push_back(k);
  if (v.empty()) throw InvalidArgument("injection_missing: empty source");
  return MonotoneMap(cod, std::move(v));
}

std::vector<MonotoneMap> monotone_maps(int n, int m) {
  std::vector<MonotoneMap> out;
  if (n < 0 || m < 0) return out;
  std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
  while (true) {
    out.emplace_back(m, v);
    int pos = n;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == m) --pos;
    if (pos < 0) break;
    const int next = v[static_cast<std::size_t>(pos)] + 1;
    for (int q = pos; q <= n; ++q) v[static_cast<std::size_t>(q)] = next;
  }
  return out;
}

std::vector<MonotoneMap> injections(int n, int m) {
  std::vector<MonotoneMap> out;
  for (auto& f : monotone_maps(n, m))
    if (f.is_injective()) out.push_back(std::move(f));
  return out;
}

std::vector<MonotoneMap> surjections(int n, int m) {
  std::vector<MonotoneMap> out;
  for (auto& f : monotone_maps(n, m))
    if (f.is_surjective()) out.push_back(std::move(f));
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace simpcalc
