#include "simpcalc/nerve.hpp"

#include <map>

#include "simpcalc/error.hpp"

namespace simpcalc {

namespace {
std::size_t uz(int k) { return static_cast<std::size_t>(k); }
}  // namespace

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<int> identities, std::vector<std::vector<int>> composition)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      composition_(std::move(composition)) {
  const int n_obj = static_cast<int>(objects_.size());
  const int n_mor = static_cast<int>(morphisms_.size());
  for (const auto& m : morphisms_) {
    if (m.source < 0 || m.source >= n_obj || m.target < 0 || m.target >= n_obj)
      throw InvalidArgument("FiniteCategory: morphism '" + m.name + "' has an unknown endpoint");
  }
  if (identities_.size() != objects_.size()) throw InvalidArgument("FiniteCategory: one identity per object required");
  for (int x = 0; x < n_obj; ++x) {
    const int id = identities_[uz(x)];
    if (id < 0 || id >= n_mor || morphisms_[uz(id)].source != x || morphisms_[uz(id)].target != x)
      throw InvalidArgument("FiniteCategory: bad identity for object '" + objects_[uz(x)] + "'");
  }
  if (composition_.size() != uz(n_mor)) throw InvalidArgument("FiniteCategory: composition table has the wrong size");
  for (int g = 0; g < n_mor; ++g) {
    if (composition_[uz(g)].size() != uz(n_mor))
      throw InvalidArgument("FiniteCategory: composition table has the wrong size");
    for (int f = 0; f < n_mor; ++f) {
      const int h = composition_[uz(g)][uz(f)];
      const bool composable = morphisms_[uz(f)].target == morphisms_[uz(g)].source;
      if (!composable) {
        if (h != -1) throw InvalidArgument("FiniteCategory: composite of non-composable morphisms");
        continue;
      }
      if (h < 0 || h >= n_mor || morphisms_[uz(h)].source != morphisms_[uz(f)].source ||
          morphisms_[uz(h)].target != morphisms_[uz(g)].target) {
        throw InvalidArgument("FiniteCategory: composite " + morphisms_[uz(g)].name + " o " + morphisms_[uz(f)].name +
                              " has the wrong endpoints");
      }
    }
  }
  for (int f = 0; f < n_mor; ++f) {
    const auto& m = morphisms_[uz(f)];
    if (compose(identity(m.target), f) != f || compose(f, identity(m.source)) != f)
      throw InvalidArgument("FiniteCategory: unit law fails for '" + m.name + "'");
  }
  for (int f = 0; f < n_mor; ++f)
    for (int g = 0; g < n_mor; ++g) {
      if (morphisms_[uz(f)].target != morphisms_[uz(g)].source) continue;
      for (int h = 0; h < n_mor; ++h) {
        if (morphisms_[uz(g)].target != morphisms_[uz(h)].source) continue;
        if (compose(h, compose(g, f)) != compose(compose(h, g), f))
          throw InvalidArgument("FiniteCategory: associativity fails");
      }
    }
}

FiniteCategory FiniteCategory::preorder(std::vector<std::string> objects, const std::function<bool(int, int)>& leq) {
  const int n = static_cast<int>(objects.size());
  for (int x = 0; x < n; ++x) {
    if (!leq(x, x)) throw InvalidArgument("preorder: relation is not reflexive");
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (leq(x, y) && leq(y, z) && !leq(x, z)) throw InvalidArgument("preorder: relation is not transitive");
  }
  std::vector<Morphism> morphisms;
  std::vector<std::vector<int>> arrow(uz(n), std::vector<int>(uz(n), -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq(x, y)) {
        arrow[uz(x)][uz(y)] = static_cast<int>(morphisms.size());
        morphisms.push_back({x == y ? "id_" + objects[uz(x)] : objects[uz(x)] + "<" + objects[uz(y)], x, y});
      }
  std::vector<int> identities;
  for (int x = 0; x < n; ++x) identities.push_back(arrow[uz(x)][uz(x)]);
  std::vector<std::vector<int>> table(morphisms.size(), std::vector<int>(morphisms.size(), -1));
  for (std::size_t g = 0; g < morphisms.size(); ++g)
    for (std::size_t f = 0; f < morphisms.size(); ++f)
      if (morphisms[f].target == morphisms[g].source)
        table[g][f] = arrow[uz(morphisms[f].source)][uz(morphisms[g].target)];
  return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), std::move(table));
}

FiniteCategory FiniteCategory::ordinal(int n) {
  if (n < 0) throw InvalidArgument("ordinal: negative size");
  std::vector<std::string> objects;
  for (int k = 0; k <= n; ++k) objects.push_back(std::to_string(k));
  return preorder(std::move(objects), [](int x, int y) { return x <= y; });
}

FiniteCategory FiniteCategory::square() {
  // object k has coordinates (k & 1, k >> 1): 00, 10, 01, 11
  return preorder({"00", "10", "01", "11"}, [](int x, int y) { return (x & 1) <= (y & 1) && (x >> 1) <= (y >> 1); });
}

bool FiniteCategory::is_identity(int m) const {
  return identities_[uz(morphisms_[uz(m)].source)] == m;
}

int FiniteCategory::compose(int g, int f) const {
  const int h = composition_[uz(g)][uz(f)];
  if (h < 0) throw InvalidArgument("FiniteCategory: morphisms are not composable");
  return h;
}

std::optional<int> FiniteCategory::arrow(int x, int y) const {
  for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m)
    if (morphisms_[uz(m)].source == x && morphisms_[uz(m)].target == y) return m;
  return std::nullopt;
}

bool FiniteCategory::is_thin() const {
  std::map<std::pair<int, int>, int> seen;
  for (const auto& m : morphisms_)
    if (++seen[{m.source, m.target}] > 1) return false;
  return true;
}

int FiniteCategory::object_index(std::string_view name) const {
  for (int x = 0; x < static_cast<int>(objects_.size()); ++x)
    if (objects_[uz(x)] == name) return x;
  throw InvalidArgument("unknown object '" + std::string(name) + "'");
}

int default_nerve_dimension(const FiniteCategory& c) { return static_cast<int>(c.object_count()) + 2; }

FiniteSSet nerve(const FiniteCategory& c, std::optional<int> d) {
  const int cap = d.value_or(default_nerve_dimension(c));
  if (cap < 0) throw InvalidArgument("nerve: negative truncation");
  const bool thin = c.is_thin();

  // a nondegenerate k-simplex is a string of k non-identity morphisms; a
  // vertex is keyed by {-1 - object}
  std::map<std::vector<int>, int> provisional;
  FiniteSSet::Builder builder;

  auto normal_form = [&](int start, const std::vector<int>& string) {
    // identities in position t give the degeneracy s_t
    std::vector<int> kept, word;
    for (int t = static_cast<int>(string.size()) - 1; t >= 0; --t) {
      if (c.is_identity(string[uz(t)])) word.push_back(t);
    }
    for (int m : string)
      if (!c.is_identity(m)) kept.push_back(m);
    const std::vector<int> key = kept.empty() ? std::vector<int>{-1 - start} : kept;
    return Simplex{provisional.at(key), word, static_cast<int>(string.size())};
  };

  auto name_of = [&](const std::vector<int>& string) {
    std::string out;
    if (thin) {
      out = c.object(c.morphism(string.front()).source);
      for (int m : string) out += "<" + c.object(c.morphism(m).target);
    } else {
      for (std::size_t t = 0; t < string.size(); ++t) out += (t ? "|" : "") + c.morphism(string[t]).name;
    }
    return out;
  };

  for (int x = 0; x < static_cast<int>(c.object_count()); ++x)
    provisional[{-1 - x}] = builder.add(c.object(x), 0);

  std::vector<std::vector<int>> current;
  for (int m = 0; m < static_cast<int>(c.morphism_count()); ++m)
    if (!c.is_identity(m)) current.push_back({m});
  for (int k = 1; k <= cap && !current.empty(); ++k) {
    for (const auto& string : current) {
      std::vector<Simplex> faces;
      for (int i = 0; i <= k; ++i) {
        std::vector<int> face;
        int start = c.morphism(string.front()).source;
        if (i == 0) {
          face.assign(string.begin() + 1, string.end());
          start = c.morphism(string.front()).target;
        } else if (i == k) {
          face.assign(string.begin(), string.end() - 1);
        } else {
          face.assign(string.begin(), string.begin() + (i - 1));
          face.push_back(c.compose(string[uz(i)], string[uz(i - 1)]));
          face.insert(face.end(), string.begin() + (i + 1), string.end());
        }
        faces.push_back(normal_form(start, face));
      }
      provisional[string] = builder.add(name_of(string), k, std::move(faces));
    }
    std::vector<std::vector<int>> next;
    if (k < cap) {
      for (const auto& string : current)
        for (int m = 0; m < static_cast<int>(c.morphism_count()); ++m)
          if (!c.is_identity(m) && c.morphism(m).source == c.morphism(string.back()).target) {
            next.push_back(string);
            next.back().push_back(m);
          }
    }
    current = std::move(next);
  }
  return std::move(builder).build();
}

FiniteSSet nerve_preorder(std::vector<std::string> objects, const std::function<bool(int, int)>& leq,
                          std::optional<int> d) {
  return nerve(FiniteCategory::preorder(std::move(objects), leq), d);
}

}  // namespace simpcalc
