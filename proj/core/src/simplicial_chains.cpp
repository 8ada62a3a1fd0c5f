#include "simpcalc/simplicial_chains.hpp"

#include <map>

#include "simpcalc/error.hpp"

namespace simpcalc {

namespace {

std::size_t uz(int k) { return static_cast<std::size_t>(k); }

/// basis position of a cell, or -1 when it is the dropped basepoint
long position(const FiniteSSet& x, int cell, bool reduced) {
  const int dim = x.cell(cell).dim;
  long pos = cell - x.first_of_dim(dim);
  if (reduced && dim == 0) {
    const int bp = *x.basepoint();
    if (cell == bp) return -1;
    if (cell > bp) --pos;
  }
  return pos;
}

std::size_t basis_size(const FiniteSSet& x, int n, bool reduced) {
  const std::size_t r = x.count(n);
  return reduced && n == 0 ? r - 1 : r;
}

ChainComplex chains(const FiniteSSet& x, bool reduced) {
  if (reduced && !x.is_pointed()) throw InvalidArgument("reduced chains need a basepoint");
  const int top = x.top_dim();
  if (top < 0) return ChainComplex();
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  for (int n = 0; n <= top; ++n) {
    ranks.push_back(basis_size(x, n, reduced));
    IntMatrix d(n == 0 ? 0 : basis_size(x, n - 1, reduced), ranks.back());
    if (n > 0) {
      for (int cell : x.ids_of_dim(n)) {
        const auto col = uz(static_cast<int>(position(x, cell, reduced)));
        const auto& faces = x.cell(cell).faces;
        for (int i = 0; i <= n; ++i) {
          if (faces[uz(i)].is_degenerate()) continue;
          const long row = position(x, faces[uz(i)].base, reduced);
          if (row < 0) continue;
          d(static_cast<std::size_t>(row), col) += (i % 2 == 0) ? 1 : -1;
        }
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(0, std::move(ranks), std::move(boundaries));
}

ChainMap induced(const SSetMap& f, bool reduced) {
  const FiniteSSet& x = f.source();
  const FiniteSSet& y = f.target();
  if (reduced) {
    if (!x.is_pointed() || !y.is_pointed()) throw InvalidArgument("reduced chain map needs pointed sets");
    if (f.image_of_cell(*x.basepoint()) != y.simplex(*y.basepoint()))
      throw InvalidArgument("reduced chain map: basepoint is not preserved");
  }
  const ChainComplex source = chains(x, reduced);
  const ChainComplex target = chains(y, reduced);
  std::map<int, IntMatrix> blocks;
  for (int n = 0; n <= x.top_dim(); ++n) {
    IntMatrix m(target.rank(n), source.rank(n));
    for (int cell : x.ids_of_dim(n)) {
      const long col = position(x, cell, reduced);
      const Simplex& img = f.image_of_cell(cell);
      if (col < 0 || img.is_degenerate()) continue;
      const long row = position(y, img.base, reduced);
      if (row >= 0) m(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = 1;
    }
    blocks.emplace(n, std::move(m));
  }
  return ChainMap(source, target, std::move(blocks));
}

}  // namespace

ChainComplex normalized_chains(const FiniteSSet& x) { return chains(x, false); }
ChainComplex reduced_normalized_chains(const FiniteSSet& x) { return chains(x, true); }

std::size_t chain_index(const FiniteSSet& x, int cell) { return static_cast<std::size_t>(position(x, cell, false)); }

ChainMap chain_map(const SSetMap& f) { return induced(f, false); }
ChainMap reduced_chain_map(const SSetMap& f) { return induced(f, true); }

}  // namespace simpcalc
