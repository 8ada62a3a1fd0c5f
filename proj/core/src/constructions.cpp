#include "simpcalc/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "simpcalc/error.hpp"

namespace simpcalc {

namespace {

std::size_t uz(int k) { return static_cast<std::size_t>(k); }

Simplex fully_degenerate(int vertex, int dim) {
  Simplex s{vertex, {}, dim};
  for (int j = dim - 1; j >= 0; --j) s.degeneracies.push_back(j);
  return s;
}

}  // namespace

// ------------------------------------------------------------ SimplexTable

SimplexTable::SimplexTable(FiniteSSet x, int top) : space_(std::move(x)) {
  for (int n = 0; n <= top; ++n) levels_.push_back(space_.simplices(n));
  faces_.resize(levels_.size());
  degeneracies_.resize(levels_.size());
  for (int n = 0; n <= top; ++n) {
    const auto& lvl = levels_[uz(n)];
    if (n >= 1) {
      auto& f = faces_[uz(n)];
      f.reserve(lvl.size() * uz(n + 1));
      for (const auto& s : lvl)
        for (int i = 0; i <= n; ++i) f.push_back(index(space_.face(s, i)));
    }
    if (n < top) {
      auto& d = degeneracies_[uz(n)];
      d.reserve(lvl.size() * uz(n + 1));
      for (const auto& s : lvl)
        for (int j = 0; j <= n; ++j) d.push_back(index(s.degenerate(j)));
    }
  }
}

int SimplexTable::index(const Simplex& x) const {
  if (x.dim < 0 || x.dim > top()) throw InvalidArgument("SimplexTable: dimension out of range");
  const auto& lvl = levels_[uz(x.dim)];
  auto it = std::lower_bound(lvl.begin(), lvl.end(), x);
  if (it == lvl.end() || *it != x) throw InvalidArgument("SimplexTable: simplex not found");
  return static_cast<int>(it - lvl.begin());
}

// ----------------------------------------------------------------- extract

ExtractedSet extract(const LevelwiseSet& levels) {
  const int top = static_cast<int>(levels.sizes.size()) - 1;
  // one witness (y, j) with x = s_j y for every degenerate x
  std::vector<std::vector<std::pair<int, int>>> source(levels.sizes.size());
  for (int n = 0; n <= top; ++n) source[uz(n)].assign(levels.sizes[uz(n)], {-1, -1});
  for (int n = 0; n < top; ++n) {
    for (std::size_t y = 0; y < levels.sizes[uz(n)]; ++y) {
      for (int j = 0; j <= n; ++j) {
        const int x = levels.degeneracies[uz(n)][y * uz(n + 1) + uz(j)];
        auto& slot = source[uz(n + 1)][uz(x)];
        if (slot.first < 0) slot = {static_cast<int>(y), j};
      }
    }
  }

  FiniteSSet::Builder builder;
  std::vector<std::vector<Simplex>> forms(levels.sizes.size());
  for (int n = 0; n <= top; ++n) {
    auto& lvl = forms[uz(n)];
    lvl.reserve(levels.sizes[uz(n)]);
    for (std::size_t x = 0; x < levels.sizes[uz(n)]; ++x) {
      const auto [y, j] = source[uz(n)][x];
      if (y >= 0) {
        lvl.push_back(forms[uz(n - 1)][uz(y)].degenerate(j));
        continue;
      }
      std::vector<Simplex> faces;
      if (n >= 1) {
        for (int i = 0; i <= n; ++i) faces.push_back(forms[uz(n - 1)][uz(levels.faces[uz(n)][x * uz(n + 1) + uz(i)])]);
      }
      const int id = builder.add(levels.name(n, static_cast<int>(x)), n, std::move(faces));
      lvl.push_back(Simplex::cell(id, n));
    }
  }
  if (levels.basepoint) builder.set_basepoint(forms[0][uz(*levels.basepoint)].base);
  auto [space, ids] = std::move(builder).build_with_ids();
  for (auto& lvl : forms)
    for (auto& s : lvl) s.base = ids[uz(s.base)];
  return ExtractedSet{std::move(space), std::move(forms)};
}

// ------------------------------------------------------------ standard simplex

std::string simplex_cell_name(std::span<const int> vertices, int n) {
  std::string out;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (n >= 10 && k > 0) out += '.';
    out += std::to_string(vertices[k]);
  }
  return out;
}

std::vector<int> simplex_cell_vertices(std::string_view name, int n) {
  std::vector<int> out;
  if (n >= 10) {
    std::size_t pos = 0;
    while (pos <= name.size()) {
      const std::size_t end = std::min(name.find('.', pos), name.size());
      out.push_back(std::stoi(std::string(name.substr(pos, end - pos))));
      pos = end + 1;
    }
  } else {
    for (char c : name) out.push_back(c - '0');
  }
  return out;
}

FiniteSSet standard_simplex(int n) {
  if (n < 0) throw InvalidArgument("standard_simplex: negative dimension");
  if (n > 20) throw InvalidArgument("standard_simplex: dimension too large");
  FiniteSSet::Builder builder;
  std::map<std::vector<int>, int> ids;
  // subsets in order of size, so that faces exist before their cofaces
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> v;
    for (int k = 0; k <= n; ++k)
      if (mask & (1u << k)) v.push_back(k);
    subsets.push_back(std::move(v));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& v : subsets) {
    const int dim = static_cast<int>(v.size()) - 1;
    std::vector<Simplex> faces;
    if (dim >= 1) {
      for (int i = 0; i <= dim; ++i) {
        std::vector<int> f = v;
        f.erase(f.begin() + i);
        faces.push_back(Simplex::cell(ids.at(f), dim - 1));
      }
    }
    ids.emplace(v, builder.add(simplex_cell_name(v, n), dim, std::move(faces)));
  }
  return std::move(builder).build();
}

Simplex simplex_with_vertices(const FiniteSSet& delta_n, int n, std::span<const int> vertices) {
  if (vertices.empty()) throw InvalidArgument("simplex_with_vertices: empty vertex list");
  std::vector<int> distinct;
  std::vector<int> word;
  for (std::size_t t = 0; t < vertices.size(); ++t) {
    if (vertices[t] < 0 || vertices[t] > n || (t > 0 && vertices[t] < vertices[t - 1]))
      throw InvalidArgument("simplex_with_vertices: vertices must be nondecreasing in [0, n]");
    if (t > 0 && vertices[t] == vertices[t - 1]) {
      word.insert(word.begin(), static_cast<int>(t) - 1);
    } else {
      distinct.push_back(vertices[t]);
    }
  }
  return Simplex{delta_n.id_of(simplex_cell_name(distinct, n)), std::move(word), static_cast<int>(vertices.size()) - 1};
}

SSetMap simplex_map(const MonotoneMap& theta, const FiniteSSet& delta_m, const FiniteSSet& delta_n) {
  const int n = theta.cod();
  const int m = theta.dom();
  std::vector<Simplex> images;
  for (const auto& c : delta_m.cells()) {
    std::vector<int> v = simplex_cell_vertices(c.name, m);
    for (int& k : v) k = theta(k);
    images.push_back(simplex_with_vertices(delta_n, n, v));
  }
  return SSetMap(SSetMap::Unchecked{}, delta_m, delta_n, std::move(images));
}

SSetMap simplex_map(const MonotoneMap& theta) {
  return simplex_map(theta, standard_simplex(theta.dom()), standard_simplex(theta.cod()));
}

FiniteSSet point() {
  FiniteSSet::Builder builder;
  builder.set_basepoint(builder.add("0", 0));
  return std::move(builder).build();
}

// -------------------------------------------------------- SimplicialSubset

SimplicialSubset::SimplicialSubset(FiniteSSet ambient, std::vector<bool> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
  if (members_.size() != ambient_.size()) throw InvalidArgument("SimplicialSubset: membership has the wrong size");
  for (int id = 0; id < static_cast<int>(members_.size()); ++id) {
    if (!members_[uz(id)]) continue;
    for (const auto& f : ambient_.cell(id).faces) {
      if (!members_[uz(f.base)]) {
        throw InvalidArgument("SimplicialSubset: '" + ambient_.cell(id).name + "' has a face outside the subset");
      }
    }
  }
}

SimplicialSubset SimplicialSubset::closure(FiniteSSet ambient, std::span<const int> generators) {
  std::vector<bool> members(ambient.size(), false);
  std::vector<int> stack(generators.begin(), generators.end());
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (id < 0 || uz(id) >= members.size()) throw InvalidArgument("closure: unknown cell id");
    if (members[uz(id)]) continue;
    members[uz(id)] = true;
    for (const auto& f : ambient.cell(id).faces) stack.push_back(f.base);
  }
  return SimplicialSubset(std::move(ambient), std::move(members));
}

SimplicialSubset SimplicialSubset::closure(FiniteSSet ambient, std::span<const std::string> generator_names) {
  std::vector<int> ids;
  for (const auto& name : generator_names) ids.push_back(ambient.id_of(name));
  return closure(std::move(ambient), ids);
}

SimplicialSubset SimplicialSubset::whole(FiniteSSet ambient) {
  std::vector<bool> members(ambient.size(), true);
  return SimplicialSubset(std::move(ambient), std::move(members));
}

SimplicialSubset SimplicialSubset::image(const SSetMap& f) {
  std::vector<int> ids;
  for (const auto& s : f.images()) ids.push_back(s.base);
  return closure(f.target(), ids);
}

std::vector<int> SimplicialSubset::ids() const {
  std::vector<int> out;
  for (int id = 0; id < static_cast<int>(members_.size()); ++id)
    if (members_[uz(id)]) out.push_back(id);
  return out;
}

std::size_t SimplicialSubset::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

FiniteSSet SimplicialSubset::materialize() const {
  // canonical order is inherited from the ambient, so position == new id
  std::vector<int> position(ambient_.size(), -1);
  FiniteSSet::Builder builder;
  for (int id : ids()) {
    const auto& c = ambient_.cell(id);
    std::vector<Simplex> faces = c.faces;
    for (auto& f : faces) f.base = position[uz(f.base)];
    position[uz(id)] = builder.add(c.name, c.dim, std::move(faces));
  }
  if (auto bp = ambient_.basepoint(); bp && contains(*bp)) builder.set_basepoint(position[uz(*bp)]);
  return std::move(builder).build();
}

SSetMap SimplicialSubset::inclusion() const {
  std::vector<Simplex> images;
  for (int id : ids()) images.push_back(ambient_.simplex(id));
  return SSetMap(SSetMap::Unchecked{}, materialize(), ambient_, std::move(images));
}

namespace {

void require_same_ambient(const SimplicialSubset& u, const SimplicialSubset& v) {
  if (!(u.ambient() == v.ambient())) throw InvalidArgument("subsets of different simplicial sets");
}

}  // namespace

SimplicialSubset intersection(const SimplicialSubset& u, const SimplicialSubset& v) {
  require_same_ambient(u, v);
  std::vector<bool> m(u.members().size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = u.members()[k] && v.members()[k];
  return SimplicialSubset(u.ambient(), std::move(m));
}

SimplicialSubset union_of(const SimplicialSubset& u, const SimplicialSubset& v) {
  require_same_ambient(u, v);
  std::vector<bool> m(u.members().size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = u.members()[k] || v.members()[k];
  return SimplicialSubset(u.ambient(), std::move(m));
}

namespace {

SimplicialSubset facet_closure(int n, int skip) {
  FiniteSSet simplex = standard_simplex(n);
  std::vector<int> generators;
  for (int j = 0; j <= n; ++j) {
    if (j == skip) continue;
    std::vector<int> v;
    for (int k = 0; k <= n; ++k)
      if (k != j) v.push_back(k);
    if (!v.empty()) generators.push_back(simplex.id_of(simplex_cell_name(v, n)));
  }
  return SimplicialSubset::closure(std::move(simplex), generators);
}

}  // namespace

SimplicialSubset horn_subset(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw InvalidArgument("horn: need n >= 1 and 0 <= i <= n");
  return facet_closure(n, i);
}

FiniteSSet horn(int n, int i) { return horn_subset(n, i).materialize(); }

SimplicialSubset boundary_subset(int n) {
  if (n < 0) throw InvalidArgument("boundary: negative dimension");
  return facet_closure(n, -1);
}

FiniteSSet boundary(int n) { return boundary_subset(n).materialize(); }

SSetMap constant_map(const FiniteSSet& x, const FiniteSSet& y, int vertex) {
  if (y.cell(vertex).dim != 0) throw InvalidArgument("constant_map: target is not a vertex");
  if (x.basepoint() && y.basepoint() && *y.basepoint() != vertex)
    throw InvalidArgument("constant_map: basepoint is not preserved");
  std::vector<Simplex> images;
  for (const auto& c : x.cells()) images.push_back(fully_degenerate(vertex, c.dim));
  return SSetMap(SSetMap::Unchecked{}, x, y, std::move(images));
}

SSetMap vertex_inclusion(const FiniteSSet& y, int vertex) {
  FiniteSSet::Builder builder;
  builder.add("0", 0);
  return constant_map(std::move(builder).build(), y, vertex);
}

// ----------------------------------------------------------------- product

Simplex Product::pair(const Simplex& a, const Simplex& b) const {
  if (a.dim != b.dim) throw InvalidArgument("Product::pair: dimensions differ");
  if (a.dim > top_) {
    // split off the common degeneracies, which brings the pair into range
    const int n = a.dim;
    const MonotoneMap sa = a.surjection(), sb = b.surjection();
    std::vector<int> common;
    for (int t = n - 1; t >= 0; --t)
      if (sa(t) == sa(t + 1) && sb(t) == sb(t + 1)) common.push_back(t);
    if (common.empty()) throw InvalidArgument("Product::pair: dimension beyond the computed range");
    const MonotoneMap theta = surjection_from_word(n, common);
    std::vector<int> section;
    for (int t = 0; t <= n; ++t)
      if (t == 0 || theta(t) != theta(t - 1)) section.push_back(t);
    const MonotoneMap delta(n, std::move(section));
    return pair(left().apply(delta, a), right().apply(delta, b)).pull_back_along(theta);
  }
  const std::size_t width = right_->level_size(a.dim);
  const std::size_t idx = uz(left_->index(a)) * width + uz(right_->index(b));
  return extracted_->normal_forms[uz(a.dim)][idx];
}

Product product(const FiniteSSet& x, const FiniteSSet& y, std::optional<int> max_dim) {
  int top = (x.top_dim() < 0 || y.top_dim() < 0) ? -1 : x.top_dim() + y.top_dim();
  if (max_dim) top = std::min(top, *max_dim);
  auto left = std::make_shared<const SimplexTable>(x, top);
  auto right = std::make_shared<const SimplexTable>(y, top);

  LevelwiseSet levels;
  for (int n = 0; n <= top; ++n) {
    const std::size_t w = right->level_size(n);
    levels.sizes.push_back(left->level_size(n) * w);
    std::vector<int> faces, degens;
    for (std::size_t a = 0; a < left->level_size(n); ++a) {
      for (std::size_t b = 0; b < w; ++b) {
        if (n >= 1) {
          const std::size_t w1 = right->level_size(n - 1);
          for (int i = 0; i <= n; ++i) {
            faces.push_back(static_cast<int>(uz(left->face(n, static_cast<int>(a), i)) * w1 +
                                             uz(right->face(n, static_cast<int>(b), i))));
          }
        }
        if (n < top) {
          const std::size_t w1 = right->level_size(n + 1);
          for (int j = 0; j <= n; ++j) {
            degens.push_back(static_cast<int>(uz(left->degeneracy(n, static_cast<int>(a), j)) * w1 +
                                              uz(right->degeneracy(n, static_cast<int>(b), j))));
          }
        }
      }
    }
    levels.faces.push_back(std::move(faces));
    levels.degeneracies.push_back(std::move(degens));
  }
  levels.name = [&](int n, int idx) {
    const std::size_t w = right->level_size(n);
    return "(" + x.format(left->at(n, static_cast<int>(uz(idx) / w))) + "," +
           y.format(right->at(n, static_cast<int>(uz(idx) % w))) + ")";
  };
  if (x.basepoint() && y.basepoint() && top >= 0) {
    levels.basepoint = static_cast<int>(uz(left->index(x.simplex(*x.basepoint()))) * right->level_size(0) +
                                        uz(right->index(y.simplex(*y.basepoint()))));
  }
  auto extracted = std::make_shared<const ExtractedSet>(extract(levels));

  std::vector<Simplex> first(extracted->space.size()), second(extracted->space.size());
  for (int n = 0; n <= top; ++n) {
    const std::size_t w = right->level_size(n);
    const auto& forms = extracted->normal_forms[uz(n)];
    for (std::size_t idx = 0; idx < forms.size(); ++idx) {
      if (forms[idx].is_degenerate()) continue;
      first[uz(forms[idx].base)] = left->at(n, static_cast<int>(idx / w));
      second[uz(forms[idx].base)] = right->at(n, static_cast<int>(idx % w));
    }
  }
  Product p;
  p.top_ = top;
  p.first_ = std::make_shared<const SSetMap>(SSetMap::Unchecked{}, extracted->space, x, std::move(first));
  p.second_ = std::make_shared<const SSetMap>(SSetMap::Unchecked{}, extracted->space, y, std::move(second));
  p.left_ = std::move(left);
  p.right_ = std::move(right);
  p.extracted_ = std::move(extracted);
  return p;
}

SSetMap pairing(const SSetMap& f, const SSetMap& g, const Product& target) {
  if (!(f.source() == g.source())) throw InvalidArgument("pairing: maps have different sources");
  if (!(f.target() == target.left()) || !(g.target() == target.right()))
    throw InvalidArgument("pairing: targets do not match the product factors");
  std::vector<Simplex> images;
  for (std::size_t id = 0; id < f.images().size(); ++id)
    images.push_back(target.pair(f.images()[id], g.images()[id]));
  return SSetMap(SSetMap::Unchecked{}, f.source(), target.space(), std::move(images));
}

SSetMap product_map(const SSetMap& f, const SSetMap& g, const Product& source, const Product& target) {
  if (!(f.source() == source.left()) || !(g.source() == source.right()))
    throw InvalidArgument("product_map: sources do not match the product factors");
  return pairing(compose(f, source.first()), compose(g, source.second()), target);
}

// ---------------------------------------------------------------- coproduct

Coproduct coproduct(std::span<const FiniteSSet> parts, std::span<const std::string> prefixes) {
  if (parts.size() != prefixes.size()) throw InvalidArgument("coproduct: one prefix per part required");
  FiniteSSet::Builder builder;
  std::vector<std::vector<int>> provisional(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const int offset = static_cast<int>(builder.size());
    for (const auto& c : parts[k].cells()) {
      std::vector<Simplex> faces = c.faces;
      for (auto& f : faces) f.base += offset;
      provisional[k].push_back(builder.add(prefixes[k] + c.name, c.dim, std::move(faces)));
    }
  }
  auto [space, ids] = std::move(builder).build_with_ids();
  Coproduct out{space, {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<Simplex> images;
    for (int p : provisional[k]) images.push_back(space.simplex(ids[uz(p)]));
    out.inclusions.emplace_back(SSetMap::Unchecked{}, parts[k], space, std::move(images));
  }
  return out;
}

// ----------------------------------------------------------------- quotient

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[uz(x)] != x) {
      parent_[uz(x)] = parent_[uz(parent_[uz(x)])];
      x = parent_[uz(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[uz(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

Quotient quotient_impl(const FiniteSSet& x, std::span<const std::pair<Simplex, Simplex>> generators,
                       std::optional<Simplex> collapsed) {
  const int top = x.top_dim();
  const SimplexTable table(x, top);
  std::vector<UnionFind> classes;
  for (int n = 0; n <= top; ++n) classes.emplace_back(table.level_size(n));

  struct Pending {
    int n, a, b;
  };
  std::vector<Pending> work;
  for (const auto& [a, b] : generators) {
    if (a.dim != b.dim) throw InvalidArgument("quotient: identified simplices have different dimensions");
    if (!x.is_valid(a) || !x.is_valid(b)) throw InvalidArgument("quotient: invalid simplex in relation");
    work.push_back({a.dim, table.index(a), table.index(b)});
  }
  while (!work.empty()) {
    const Pending p = work.back();
    work.pop_back();
    if (!classes[uz(p.n)].unite(p.a, p.b)) continue;
    if (p.n >= 1)
      for (int i = 0; i <= p.n; ++i) work.push_back({p.n - 1, table.face(p.n, p.a, i), table.face(p.n, p.b, i)});
    if (p.n < top)
      for (int j = 0; j <= p.n; ++j)
        work.push_back({p.n + 1, table.degeneracy(p.n, p.a, j), table.degeneracy(p.n, p.b, j)});
  }

  // number the classes by their least element
  std::vector<std::vector<int>> class_of(uz(top + 1)), representative(uz(top + 1));
  for (int n = 0; n <= top; ++n) {
    auto& cls = class_of[uz(n)];
    cls.assign(table.level_size(n), -1);
    for (int e = 0; e < static_cast<int>(table.level_size(n)); ++e) {
      const int root = classes[uz(n)].find(e);
      if (cls[uz(root)] < 0) {
        cls[uz(root)] = static_cast<int>(representative[uz(n)].size());
        representative[uz(n)].push_back(e);
      }
      cls[uz(e)] = cls[uz(root)];
    }
  }

  std::optional<int> marked;
  if (collapsed) marked = class_of[0][uz(table.index(*collapsed))];

  LevelwiseSet levels;
  for (int n = 0; n <= top; ++n) {
    levels.sizes.push_back(representative[uz(n)].size());
    std::vector<int> faces, degens;
    for (int r : representative[uz(n)]) {
      if (n >= 1)
        for (int i = 0; i <= n; ++i) faces.push_back(class_of[uz(n - 1)][uz(table.face(n, r, i))]);
      if (n < top)
        for (int j = 0; j <= n; ++j) degens.push_back(class_of[uz(n + 1)][uz(table.degeneracy(n, r, j))]);
    }
    levels.faces.push_back(std::move(faces));
    levels.degeneracies.push_back(std::move(degens));
  }
  // least member cell of each nondegenerate class, by canonical id
  std::vector<std::map<int, int>> least(uz(top + 1));
  for (int id = 0; id < static_cast<int>(x.size()); ++id) {
    const int n = x.cell(id).dim;
    const int cls = class_of[uz(n)][uz(table.index(x.simplex(id)))];
    least[uz(n)].try_emplace(cls, id);
  }
  levels.name = [&](int n, int cls) -> std::string {
    if (n == 0 && marked && cls == *marked) return "*";
    return x.cell(least[uz(n)].at(cls)).name;
  };
  if (marked) {
    levels.basepoint = *marked;
  } else if (auto bp = x.basepoint()) {
    levels.basepoint = class_of[0][uz(table.index(x.simplex(*bp)))];
  }
  ExtractedSet extracted = extract(levels);

  std::vector<Simplex> images;
  for (int id = 0; id < static_cast<int>(x.size()); ++id) {
    const int n = x.cell(id).dim;
    images.push_back(extracted.normal_forms[uz(n)][uz(class_of[uz(n)][uz(table.index(x.simplex(id)))])]);
  }
  FiniteSSet space = extracted.space;
  return Quotient{space, SSetMap(SSetMap::Unchecked{}, x, space, std::move(images))};
}

}  // namespace

Quotient quotient_by(const FiniteSSet& x, std::span<const std::pair<Simplex, Simplex>> generators) {
  return quotient_impl(x, generators, std::nullopt);
}

Quotient quotient(const SimplicialSubset& a) {
  const auto ids = a.ids();
  if (ids.empty()) throw InvalidArgument("quotient: the collapsed subset is empty");
  const FiniteSSet& x = a.ambient();
  const int v0 = ids.front();  // the least id is a vertex
  std::vector<std::pair<Simplex, Simplex>> generators;
  for (int id : ids) generators.emplace_back(x.simplex(id), fully_degenerate(v0, x.cell(id).dim));
  return quotient_impl(x, generators, x.simplex(v0));
}

// ------------------------------------------------------------------ pushout

Pushout pushout(const SSetMap& f, const SSetMap& g) {
  if (!(f.source() == g.source())) throw InvalidArgument("pushout: maps have different sources");
  const std::vector<FiniteSSet> parts{f.target(), g.target()};
  const std::vector<std::string> prefixes{"U:", "V:"};
  Coproduct sum = coproduct(parts, prefixes);
  if (auto bp = f.target().basepoint()) {
    FiniteSSet pointed = sum.space.with_basepoint(sum.inclusions[0].image_of_cell(*bp).base);
    for (auto& inc : sum.inclusions) inc = SSetMap(SSetMap::Unchecked{}, inc.source(), pointed, inc.images());
    sum.space = pointed;
  }
  std::vector<std::pair<Simplex, Simplex>> generators;
  for (std::size_t w = 0; w < f.images().size(); ++w)
    generators.emplace_back(sum.inclusions[0](f.images()[w]), sum.inclusions[1](g.images()[w]));
  Quotient q = quotient_by(sum.space, generators);
  SSetMap left = compose(q.projection, sum.inclusions[0]);
  SSetMap right = compose(q.projection, sum.inclusions[1]);
  FiniteSSet space = q.space;
  return Pushout{std::move(space), std::move(left), std::move(right), std::move(sum), std::move(q)};
}

// ----------------------------------------------------------------- pullback

Pullback pullback(const SSetMap& p, const SSetMap& q, std::optional<int> max_dim) {
  if (!(p.target() == q.target())) throw InvalidArgument("pullback: maps have different targets");
  const Product prod = product(p.source(), q.source(), max_dim);
  std::vector<bool> members(prod.space().size());
  for (std::size_t id = 0; id < members.size(); ++id)
    members[id] = p(prod.first().images()[id]) == q(prod.second().images()[id]);
  const SimplicialSubset sub(prod.space(), std::move(members));
  const SSetMap inc = sub.inclusion();
  return Pullback{inc.source(), compose(prod.first(), inc), compose(prod.second(), inc)};
}

}  // namespace simpcalc
