#include "simpcalc/simplicial_set.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

#include "simpcalc/error.hpp"

namespace simpcalc {

// ---------------------------------------------------------------- Simplex

MonotoneMap Simplex::surjection() const { return surjection_from_word(dim, degeneracies); }

Simplex Simplex::degenerate(int j) const { return pull_back_along(MonotoneMap::codegeneracy(dim, j)); }

Simplex Simplex::pull_back_along(const MonotoneMap& eta) const {
  const MonotoneMap composite = compose(surjection(), eta);
  return Simplex{base, degeneracy_word(composite), composite.dom()};
}

// ------------------------------------------------------------- FiniteSSet

struct FiniteSSet::Data {
  std::vector<Cell> cells;
  std::vector<int> offsets;  // offsets[k] = first id of dimension k; size top+2
  std::map<std::string, int, std::less<>> by_name;
  std::optional<int> basepoint;
};

FiniteSSet::FiniteSSet() {
  auto d = std::make_shared<Data>();
  d->offsets = {0};
  data_ = std::move(d);
}

FiniteSSet::FiniteSSet(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

int FiniteSSet::top_dim() const { return static_cast<int>(data_->offsets.size()) - 2; }
std::size_t FiniteSSet::size() const { return data_->cells.size(); }

std::size_t FiniteSSet::count(int k) const {
  if (k < 0 || k > top_dim()) return 0;
  return static_cast<std::size_t>(first_of_dim(k + 1) - first_of_dim(k));
}

std::vector<std::size_t> FiniteSSet::counts() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= top_dim(); ++k) out.push_back(count(k));
  return out;
}

const FiniteSSet::Cell& FiniteSSet::cell(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= data_->cells.size())
    throw InvalidArgument("FiniteSSet: cell id " + std::to_string(id) + " out of range");
  return data_->cells[static_cast<std::size_t>(id)];
}

std::span<const FiniteSSet::Cell> FiniteSSet::cells() const { return data_->cells; }

int FiniteSSet::first_of_dim(int k) const {
  if (k <= 0) return 0;
  if (k > top_dim()) return static_cast<int>(size());
  return data_->offsets[static_cast<std::size_t>(k)];
}

std::optional<int> FiniteSSet::find(std::string_view name) const {
  auto it = data_->by_name.find(name);
  if (it == data_->by_name.end()) return std::nullopt;
  return it->second;
}

int FiniteSSet::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw InvalidArgument("unknown simplex name '" + std::string(name) + "'");
}

std::optional<int> FiniteSSet::basepoint() const { return data_->basepoint; }

FiniteSSet FiniteSSet::with_basepoint(std::optional<int> vertex) const {
  if (vertex && cell(*vertex).dim != 0) throw InvalidArgument("basepoint must be a vertex");
  auto d = std::make_shared<Data>(*data_);
  d->basepoint = vertex;
  return FiniteSSet(std::move(d));
}

Simplex FiniteSSet::restrict_cell(int base, const MonotoneMap& mono) const {
  if (mono.is_identity()) return simplex(base);
  // peel off the largest value missed by mono
  std::vector<char> hit(static_cast<std::size_t>(mono.cod()) + 1, 0);
  for (int v : mono.values()) hit[static_cast<std::size_t>(v)] = 1;
  int missing = mono.cod();
  while (hit[static_cast<std::size_t>(missing)]) --missing;
  std::vector<int> rest(mono.values());
  for (int& v : rest)
    if (v > missing) --v;
  const MonotoneMap reduced(mono.cod() - 1, std::move(rest));
  return apply(reduced, cell(base).faces[static_cast<std::size_t>(missing)]);
}

Simplex FiniteSSet::apply(const MonotoneMap& theta, const Simplex& x) const {
  if (theta.cod() != x.dim) throw InvalidArgument("apply: operator target does not match simplex dimension");
  const auto factored = epi_mono_factor(compose(x.surjection(), theta));
  return restrict_cell(x.base, factored.mono).pull_back_along(factored.epi);
}

Simplex FiniteSSet::face(const Simplex& x, int i) const {
  if (x.dim < 1 || i < 0 || i > x.dim) throw InvalidArgument("face: index out of range");
  return apply(MonotoneMap::coface(x.dim, i), x);
}

Simplex FiniteSSet::vertex(const Simplex& x, int k) const {
  return apply(MonotoneMap::constant(0, x.dim, k), x);
}

std::vector<Simplex> FiniteSSet::simplices(int n) const {
  std::vector<Simplex> out;
  if (n < 0) return out;
  for (int k = 0; k <= std::min(n, top_dim()); ++k) {
    const auto surj = surjections(n, k);
    for (int id : ids_of_dim(k))
      for (const auto& s : surj) out.push_back(Simplex{id, degeneracy_word(s), n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t FiniteSSet::simplex_count(int n) const {
  std::size_t total = 0;
  for (int k = 0; k <= std::min(n, top_dim()); ++k) total += count(k) * static_cast<std::size_t>(binomial(n, k));
  return total;
}

bool FiniteSSet::is_valid(const Simplex& x) const {
  if (x.base < 0 || static_cast<std::size_t>(x.base) >= size()) return false;
  if (cell(x.base).dim != x.base_dim()) return false;
  for (std::size_t a = 0; a < x.degeneracies.size(); ++a) {
    const int j = x.degeneracies[a];
    if (j < 0 || j >= x.dim) return false;
    if (a > 0 && j >= x.degeneracies[a - 1]) return false;
  }
  return true;
}

std::string FiniteSSet::format(const Simplex& x) const {
  std::string out;
  for (int j : x.degeneracies) out += "s" + std::to_string(j);
  if (!out.empty()) out += ":";
  return out + cell(x.base).name;
}

Simplex FiniteSSet::parse(std::string_view text) const {
  if (auto id = find(text)) return simplex(*id);
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == 's') {
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos + 1) break;
    word.push_back(std::stoi(std::string(text.substr(pos + 1, end - pos - 1))));
    pos = end;
  }
  if (word.empty() || pos >= text.size() || text[pos] != ':')
    throw InvalidArgument("cannot parse simplex '" + std::string(text) + "'");
  const int base = id_of(text.substr(pos + 1));
  Simplex s{base, word, cell(base).dim + static_cast<int>(word.size())};
  if (!is_valid(s)) throw InvalidArgument("invalid degeneracy word in '" + std::string(text) + "'");
  return s;
}

bool operator==(const FiniteSSet& a, const FiniteSSet& b) {
  return a.data_ == b.data_ || (a.data_->cells == b.data_->cells && a.data_->basepoint == b.data_->basepoint);
}

// ---------------------------------------------------------------- Builder

int FiniteSSet::Builder::add(std::string name, int dim, std::vector<Simplex> faces) {
  cells_.push_back(Cell{std::move(name), dim, std::move(faces)});
  return static_cast<int>(cells_.size()) - 1;
}

FiniteSSet FiniteSSet::Builder::build() && { return std::move(*this).build_with_ids().first; }

std::pair<FiniteSSet, std::vector<int>> FiniteSSet::Builder::build_with_ids() && {
  const std::size_t n = cells_.size();
  std::set<std::string, std::less<>> names;
  for (const auto& c : cells_) {
    if (c.name.empty()) throw InvalidArgument("simplex names must be nonempty");
    if (!names.insert(c.name).second) throw InvalidArgument("duplicate simplex name '" + c.name + "'");
    if (c.dim < 0) throw InvalidArgument("negative dimension for '" + c.name + "'");
    const std::size_t expected = c.dim == 0 ? 0 : static_cast<std::size_t>(c.dim) + 1;
    if (c.faces.size() != expected) {
      throw InvalidArgument("simplex '" + c.name + "' has " + std::to_string(c.faces.size()) + " faces, expected " +
                            std::to_string(expected));
    }
    for (const auto& f : c.faces) {
      if (f.base < 0 || static_cast<std::size_t>(f.base) >= n)
        throw InvalidArgument("face of '" + c.name + "' refers to an unknown simplex");
      if (f.dim != c.dim - 1 || cells_[static_cast<std::size_t>(f.base)].dim != f.base_dim())
        throw InvalidArgument("face of '" + c.name + "' has the wrong dimension");
      for (std::size_t a = 0; a < f.degeneracies.size(); ++a) {
        const int j = f.degeneracies[a];
        if (j < 0 || j >= f.dim || (a > 0 && j >= f.degeneracies[a - 1]))
          throw InvalidArgument("face of '" + c.name + "' has a degeneracy word not in normal form");
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ca = cells_[static_cast<std::size_t>(a)];
    const auto& cb = cells_[static_cast<std::size_t>(b)];
    return std::tie(ca.dim, ca.name) < std::tie(cb.dim, cb.name);
  });
  std::vector<int> canonical(n);
  for (std::size_t k = 0; k < n; ++k) canonical[static_cast<std::size_t>(order[k])] = static_cast<int>(k);

  auto data = std::make_shared<Data>();
  int top = -1;
  for (int old : order) {
    Cell c = std::move(cells_[static_cast<std::size_t>(old)]);
    for (auto& f : c.faces) f.base = canonical[static_cast<std::size_t>(f.base)];
    top = std::max(top, c.dim);
    data->by_name.emplace(c.name, static_cast<int>(data->cells.size()));
    data->cells.push_back(std::move(c));
  }
  data->offsets.assign(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 0; k <= top + 1; ++k) {
    data->offsets[static_cast<std::size_t>(k)] = static_cast<int>(
        std::find_if(data->cells.begin(), data->cells.end(), [k](const Cell& c) { return c.dim >= k; }) -
        data->cells.begin());
  }
  if (basepoint_) {
    if (*basepoint_ < 0 || static_cast<std::size_t>(*basepoint_) >= n)
      throw InvalidArgument("basepoint refers to an unknown simplex");
    data->basepoint = canonical[static_cast<std::size_t>(*basepoint_)];
    if (data->cells[static_cast<std::size_t>(*data->basepoint)].dim != 0)
      throw InvalidArgument("basepoint must be a vertex");
  }

  FiniteSSet result(std::move(data));
  // simplicial identities d_i d_j = d_{j-1} d_i for i < j
  for (const auto& c : result.cells()) {
    if (c.dim < 2) continue;
    for (int j = 1; j <= c.dim; ++j) {
      for (int i = 0; i < j; ++i) {
        const Simplex lhs = result.face(c.faces[static_cast<std::size_t>(j)], i);
        const Simplex rhs = result.face(c.faces[static_cast<std::size_t>(i)], j - 1);
        if (lhs != rhs) {
          throw InvalidArgument("simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
                                std::to_string(j - 1) + " d" + std::to_string(i) + " fails on '" + c.name + "'");
        }
      }
    }
  }
  return {std::move(result), std::move(canonical)};
}

// ----------------------------------------------------------------- SSetMap

SSetMap::SSetMap(Unchecked, FiniteSSet source, FiniteSSet target, std::vector<Simplex> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

SSetMap::SSetMap(FiniteSSet source, FiniteSSet target, std::vector<Simplex> images)
    : SSetMap(Unchecked{}, std::move(source), std::move(target), std::move(images)) {
  if (images_.size() != source_.size()) throw InvalidArgument("SSetMap: one image per source cell required");
  for (std::size_t id = 0; id < images_.size(); ++id) {
    const auto& c = source_.cell(static_cast<int>(id));
    const Simplex& img = images_[id];
    if (!target_.is_valid(img) || img.dim != c.dim)
      throw InvalidArgument("SSetMap: image of '" + c.name + "' is not a simplex of matching dimension");
  }
  for (std::size_t id = 0; id < images_.size(); ++id) {
    const auto& c = source_.cell(static_cast<int>(id));
    for (int i = 0; i < static_cast<int>(c.faces.size()); ++i) {
      if ((*this)(c.faces[static_cast<std::size_t>(i)]) != target_.face(images_[id], i)) {
        throw InvalidArgument("SSetMap: face d" + std::to_string(i) + " of '" + c.name + "' is not preserved");
      }
    }
  }
  if (source_.basepoint() && target_.basepoint() &&
      images_[static_cast<std::size_t>(*source_.basepoint())] != target_.simplex(*target_.basepoint())) {
    throw InvalidArgument("SSetMap: basepoint is not preserved");
  }
}

SSetMap SSetMap::identity(const FiniteSSet& x) {
  std::vector<Simplex> images;
  for (int id = 0; id < static_cast<int>(x.size()); ++id) images.push_back(x.simplex(id));
  return SSetMap(Unchecked{}, x, x, std::move(images));
}

SSetMap SSetMap::from_names(const FiniteSSet& source, const FiniteSSet& target,
                            const std::map<std::string, std::string>& images) {
  std::vector<Simplex> out;
  for (const auto& c : source.cells()) {
    auto it = images.find(c.name);
    if (it == images.end()) throw InvalidArgument("SSetMap: no image given for '" + c.name + "'");
    out.push_back(target.parse(it->second));
  }
  return SSetMap(source, target, std::move(out));
}

Simplex SSetMap::operator()(const Simplex& x) const {
  return images_[static_cast<std::size_t>(x.base)].pull_back_along(x.surjection());
}

bool SSetMap::is_injective() const {
  std::set<int> seen;
  for (const auto& img : images_) {
    if (img.is_degenerate() || !seen.insert(img.base).second) return false;
  }
  return true;
}

bool SSetMap::is_isomorphism() const { return is_injective() && images_.size() == target_.size(); }

bool operator==(const SSetMap& a, const SSetMap& b) {
  return a.images_ == b.images_ && a.source_ == b.source_ && a.target_ == b.target_;
}

SSetMap compose(const SSetMap& g, const SSetMap& f) {
  if (!(f.target() == g.source())) throw InvalidArgument("compose: maps are not composable");
  std::vector<Simplex> images;
  images.reserve(f.images().size());
  for (const auto& img : f.images()) images.push_back(g(img));
  return SSetMap(SSetMap::Unchecked{}, f.source(), g.target(), std::move(images));
}

}  // namespace simpcalc
