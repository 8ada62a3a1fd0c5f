#include "simpcalc/enumeration.hpp"

#include <functional>
#include <map>

#include "simpcalc/constructions.hpp"
#include "simpcalc/error.hpp"

namespace simpcalc {

namespace {

std::size_t uz(int k) { return static_cast<std::size_t>(k); }

class MapSearch {
 public:
  MapSearch(const FiniteSSet& x, const FiniteSSet& y, const std::vector<std::optional<Simplex>>& fixed,
            const EnumerationOptions& options)
      : x_(x), y_(y), fixed_(fixed), options_(options), table_(y, x.top_dim()), images_(x.size()), used_(y.size()) {
    if (fixed_.size() != x_.size()) throw InvalidArgument("enumerate_extensions: one entry per cell required");
    by_first_face_.resize(uz(std::max(table_.top() + 1, 0)));
    for (int k = 1; k <= table_.top(); ++k) {
      auto& buckets = by_first_face_[uz(k)];
      buckets.resize(table_.level_size(k - 1));
      for (int idx = 0; idx < static_cast<int>(table_.level_size(k)); ++idx)
        buckets[uz(table_.face(k, idx, 0))].push_back(idx);
    }
    if (x_.basepoint() && y_.basepoint()) pinned_ = {*x_.basepoint(), y_.simplex(*y_.basepoint())};
  }

  /// visit returns false to stop the search.
  void run(const std::function<bool(const std::vector<Simplex>&)>& visit) {
    visit_ = &visit;
    extend(0);
  }

 private:
  Simplex image(const Simplex& s) const { return images_[uz(s.base)].pull_back_along(s.surjection()); }

  bool admissible(int id, int k, int idx) {
    if (++tried_ > options_.max_candidates) {
      throw EnumerationLimitExceeded("map enumeration exceeded " + std::to_string(options_.max_candidates) +
                                     " candidate assignments");
    }
    const Simplex& cand = table_.at(k, idx);
    if (options_.injective && (cand.is_degenerate() || used_[uz(cand.base)])) return false;
    if (fixed_[uz(id)] && *fixed_[uz(id)] != cand) return false;
    if (pinned_ && pinned_->first == id && pinned_->second != cand) return false;
    const auto& faces = x_.cell(id).faces;
    for (int i = 1; i <= k; ++i)
      if (table_.face(k, idx, i) != table_.index(image(faces[uz(i)]))) return false;
    return true;
  }

  bool extend(int id) {
    if (uz(id) == x_.size()) return (*visit_)(images_);
    const int k = x_.cell(id).dim;
    auto try_candidate = [&](int idx) {
      if (!admissible(id, k, idx)) return true;
      const Simplex& cand = table_.at(k, idx);
      images_[uz(id)] = cand;
      if (options_.injective) used_[uz(cand.base)] = true;
      const bool go_on = extend(id + 1);
      if (options_.injective) used_[uz(cand.base)] = false;
      return go_on;
    };
    if (k == 0) {
      for (int idx = 0; idx < static_cast<int>(table_.level_size(0)); ++idx)
        if (!try_candidate(idx)) return false;
      return true;
    }
    const int first = table_.index(image(x_.cell(id).faces[0]));
    for (int idx : by_first_face_[uz(k)][uz(first)])
      if (!try_candidate(idx)) return false;
    return true;
  }

  const FiniteSSet& x_;
  const FiniteSSet& y_;
  const std::vector<std::optional<Simplex>>& fixed_;
  EnumerationOptions options_;
  SimplexTable table_;
  std::vector<std::vector<std::vector<int>>> by_first_face_;
  std::vector<Simplex> images_;
  std::vector<char> used_;
  std::optional<std::pair<int, Simplex>> pinned_;
  std::size_t tried_ = 0;
  const std::function<bool(const std::vector<Simplex>&)>* visit_ = nullptr;
};

}  // namespace

std::vector<SSetMap> enumerate_extensions(const FiniteSSet& x, const FiniteSSet& y,
                                          const std::vector<std::optional<Simplex>>& fixed,
                                          const EnumerationOptions& options) {
  std::vector<SSetMap> out;
  MapSearch search(x, y, fixed, options);
  search.run([&](const std::vector<Simplex>& images) {
    out.emplace_back(SSetMap::Unchecked{}, x, y, images);
    return true;
  });
  return out;
}

std::vector<SSetMap> enumerate_maps(const FiniteSSet& x, const FiniteSSet& y, const EnumerationOptions& options) {
  return enumerate_extensions(x, y, std::vector<std::optional<Simplex>>(x.size()), options);
}

std::size_t count_maps(const FiniteSSet& x, const FiniteSSet& y, const EnumerationOptions& options) {
  std::size_t count = 0;
  const std::vector<std::optional<Simplex>> fixed(x.size());
  MapSearch search(x, y, fixed, options);
  search.run([&](const std::vector<Simplex>&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<SSetMap> find_isomorphism(const FiniteSSet& x, const FiniteSSet& y, std::size_t max_candidates) {
  if (x.counts() != y.counts() || x.is_pointed() != y.is_pointed()) return std::nullopt;
  std::optional<SSetMap> found;
  const std::vector<std::optional<Simplex>> fixed(x.size());
  MapSearch search(x, y, fixed, EnumerationOptions{max_candidates, true});
  search.run([&](const std::vector<Simplex>& images) {
    found.emplace(SSetMap::Unchecked{}, x, y, images);
    return false;
  });
  return found;
}

bool are_isomorphic(const FiniteSSet& x, const FiniteSSet& y, std::size_t max_candidates) {
  return find_isomorphism(x, y, max_candidates).has_value();
}

}  // namespace simpcalc
