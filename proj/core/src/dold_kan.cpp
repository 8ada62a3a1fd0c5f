#include "simpcalc/dold_kan.hpp"

#include <map>

#include "simpcalc/error.hpp"
#include "simpcalc/smith.hpp"

namespace simpcalc {

namespace {

std::size_t uz(int k) { return static_cast<std::size_t>(k); }

IntMatrix stacked_faces(const SimplicialAbelianGroup& a, int n) {
  IntMatrix m(0, a.rank(n));
  for (int i = 1; i <= n; ++i) m = IntMatrix::vstack(m, a.face(n, i));
  return m;
}

std::vector<IntMatrix> moore_bases(const SimplicialAbelianGroup& a) {
  std::vector<IntMatrix> bases;
  for (int n = 0; n <= a.cap(); ++n)
    bases.push_back(n == 0 ? IntMatrix::identity(a.rank(0)) : kernel_basis(stacked_faces(a, n)));
  return bases;
}

IntMatrix coordinates_in(const IntMatrix& basis) {
  return basis.cols() == 0 ? IntMatrix(0, basis.rows()) : left_inverse(basis);
}

/// c restricted to degrees 0..cap
ChainComplex cut_above(const ChainComplex& c, int cap) {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  for (int n = 0; n <= std::min(cap, c.high()); ++n) {
    ranks.push_back(c.rank(n));
    boundaries.push_back(n == 0 ? IntMatrix(0, c.rank(0)) : c.boundary(n));
  }
  return ChainComplex(0, std::move(ranks), std::move(boundaries));
}

void require_nonneg(const ChainComplex& c) {
  if (!c.ranks().empty() && c.low() < 0) {
    for (int n = c.low(); n < 0; ++n)
      if (c.rank(n) != 0) throw InvalidArgument("Dold-Kan: the complex has negative degrees");
  }
}

}  // namespace

// ---------------------------------------------------- SimplicialAbelianGroup

bool SimplicialAbelianGroup::satisfies_identities(const std::vector<std::size_t>& ranks,
                                                  const std::vector<std::vector<IntMatrix>>& faces,
                                                  const std::vector<std::vector<IntMatrix>>& degeneracies) {
  const int cap = static_cast<int>(ranks.size()) - 1;
  if (faces.size() != ranks.size() || degeneracies.size() != ranks.size()) return false;
  auto r = [&](int n) { return ranks[uz(n)]; };
  for (int n = 0; n <= cap; ++n) {
    if (faces[uz(n)].size() != (n == 0 ? 0 : uz(n + 1))) return false;
    if (degeneracies[uz(n)].size() != (n == cap ? 0 : uz(n + 1))) return false;
    for (const auto& d : faces[uz(n)])
      if (d.rows() != r(n - 1) || d.cols() != r(n)) return false;
    for (const auto& s : degeneracies[uz(n)])
      if (s.rows() != r(n + 1) || s.cols() != r(n)) return false;
  }
  auto d = [&](int n, int i) -> const IntMatrix& { return faces[uz(n)][uz(i)]; };
  auto s = [&](int n, int j) -> const IntMatrix& { return degeneracies[uz(n)][uz(j)]; };
  for (int n = 2; n <= cap; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (d(n - 1, i) * d(n, j) != d(n - 1, j - 1) * d(n, i)) return false;
  for (int n = 0; n + 1 < cap; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (s(n + 1, i) * s(n, j) != s(n + 1, j + 1) * s(n, i)) return false;
  for (int n = 0; n < cap; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= n + 1; ++i) {
        const IntMatrix lhs = d(n + 1, i) * s(n, j);
        IntMatrix rhs;
        if (i < j) {
          rhs = s(n - 1, j - 1) * d(n, i);
        } else if (i == j || i == j + 1) {
          rhs = IntMatrix::identity(r(n));
        } else {
          rhs = s(n - 1, j) * d(n, i - 1);
        }
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

SimplicialAbelianGroup::SimplicialAbelianGroup(std::vector<std::size_t> ranks,
                                               std::vector<std::vector<IntMatrix>> faces,
                                               std::vector<std::vector<IntMatrix>> degeneracies)
    : ranks_(std::move(ranks)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
  if (ranks_.empty()) throw InvalidArgument("SimplicialAbelianGroup: need at least dimension 0");
  if (!satisfies_identities(ranks_, faces_, degeneracies_))
    throw InvalidArgument("SimplicialAbelianGroup: shapes or simplicial identities fail");
}

SimplicialAbelianGroup SimplicialAbelianGroup::constant(std::size_t rank, int cap) {
  std::vector<std::size_t> ranks(uz(cap + 1), rank);
  std::vector<std::vector<IntMatrix>> faces(ranks.size()), degens(ranks.size());
  for (int n = 0; n <= cap; ++n) {
    if (n > 0) faces[uz(n)].assign(uz(n + 1), IntMatrix::identity(rank));
    if (n < cap) degens[uz(n)].assign(uz(n + 1), IntMatrix::identity(rank));
  }
  return SimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degens));
}

// ------------------------------------------------------------- truncation

ChainComplex truncate_nonneg(const ChainComplex& c) {
  if (c.ranks().empty() || c.high() < 0) return ChainComplex();
  const IntMatrix cycles = kernel_basis(c.boundary(0));
  const IntMatrix coords = coordinates_in(cycles);
  std::vector<std::size_t> ranks{cycles.cols()};
  std::vector<IntMatrix> boundaries{IntMatrix(0, cycles.cols())};
  for (int n = 1; n <= c.high(); ++n) {
    ranks.push_back(c.rank(n));
    boundaries.push_back(n == 1 ? coords * c.boundary(1) : c.boundary(n));
  }
  return ChainComplex(0, std::move(ranks), std::move(boundaries));
}

// -------------------------------------------------------------------- K

std::vector<KSummand> dold_kan_summands(const ChainComplex& c, int n) {
  std::vector<KSummand> out;
  std::size_t offset = 0;
  for (int k = 0; k <= n; ++k) {
    if (c.rank(k) == 0) continue;
    for (auto& eta : surjections(n, k)) {
      out.push_back({std::move(eta), offset});
      offset += c.rank(k);
    }
  }
  return out;
}

SimplicialAbelianGroup dold_kan_K(const ChainComplex& c, int cap) {
  require_nonneg(c);
  if (cap < 0) throw InvalidArgument("dold_kan_K: negative cap");
  std::vector<std::vector<KSummand>> summands;
  std::vector<std::map<MonotoneMap, std::size_t>> lookup;
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= cap; ++n) {
    summands.push_back(dold_kan_summands(c, n));
    std::map<MonotoneMap, std::size_t> index;
    std::size_t total = 0;
    for (const auto& s : summands.back()) {
      index.emplace(s.eta, s.offset);
      total = s.offset + c.rank(s.eta.cod());
    }
    lookup.push_back(std::move(index));
    ranks.push_back(total);
  }

  // θ^*: K_n -> K_m for θ: [m] -> [n]
  auto act = [&](const MonotoneMap& theta) {
    const int m = theta.dom();
    const int n = theta.cod();
    IntMatrix out(ranks[uz(m)], ranks[uz(n)]);
    for (const auto& s : summands[uz(n)]) {
      const int k = s.eta.cod();
      const auto f = epi_mono_factor(compose(s.eta, theta));
      const int j = f.epi.cod();
      if (c.rank(j) == 0) continue;
      const std::size_t row = lookup[uz(m)].at(f.epi);
      if (j == k) {
        out.set_block(row, s.offset, IntMatrix::identity(c.rank(k)));
      } else if (j == k - 1 && f.mono == MonotoneMap::coface(k, 0)) {
        out.set_block(row, s.offset, c.boundary(k));
      }
    }
    return out;
  };

  std::vector<std::vector<IntMatrix>> faces(ranks.size()), degens(ranks.size());
  for (int n = 0; n <= cap; ++n) {
    for (int i = 0; n > 0 && i <= n; ++i) faces[uz(n)].push_back(act(MonotoneMap::coface(n, i)));
    for (int j = 0; n < cap && j <= n; ++j) degens[uz(n)].push_back(act(MonotoneMap::codegeneracy(n, j)));
  }
  return SimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degens));
}

// ------------------------------------------------------------------ Moore

ChainComplex moore_normalized(const SimplicialAbelianGroup& a) {
  const auto bases = moore_bases(a);
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  for (int n = 0; n <= a.cap(); ++n) {
    ranks.push_back(bases[uz(n)].cols());
    if (n == 0) {
      boundaries.push_back(IntMatrix(0, ranks.back()));
    } else {
      boundaries.push_back(coordinates_in(bases[uz(n - 1)]) * a.face(n, 0) * bases[uz(n)]);
    }
  }
  return ChainComplex(0, std::move(ranks), std::move(boundaries));
}

ChainMap dold_kan_unit(const ChainComplex& c, int cap) {
  const SimplicialAbelianGroup a = dold_kan_K(c, cap);
  const auto bases = moore_bases(a);
  const ChainComplex source = cut_above(c, cap);
  const ChainComplex target = moore_normalized(a);
  std::map<int, IntMatrix> blocks;
  for (int n = 0; n <= cap; ++n) {
    IntMatrix inclusion(a.rank(n), c.rank(n));
    if (c.rank(n) > 0) {
      const auto summands = dold_kan_summands(c, n);
      for (const auto& s : summands)
        if (s.eta.is_identity()) inclusion.set_block(s.offset, 0, IntMatrix::identity(c.rank(n)));
    }
    blocks.emplace(n, coordinates_in(bases[uz(n)]) * inclusion);
  }
  return ChainMap(source, target, std::move(blocks));
}

HomologyGroup simplicial_homotopy_group(const SimplicialAbelianGroup& a, int n) {
  if (n < 0) throw InvalidArgument("simplicial_homotopy_group: negative degree");
  if (a.cap() < n + 1) throw InvalidArgument("simplicial_homotopy_group: cap must be at least n + 1");
  return homology(moore_normalized(a), n);
}

HomologyGroup map_homotopy_groups(const ChainComplex& c, int n) {
  if (n < 0) throw InvalidArgument("map_homotopy_groups: negative degree");
  return simplicial_homotopy_group(dold_kan_K(truncate_nonneg(c), n + 2), n);
}

}  // namespace simpcalc
