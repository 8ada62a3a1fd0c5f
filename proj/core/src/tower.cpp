#include "simpcalc/tower.hpp"

#include <algorithm>

#include "simpcalc/constructions.hpp"
#include "simpcalc/error.hpp"
#include "simpcalc/simplicial_chains.hpp"

namespace simpcalc {

Suspension SuspensionCache::step(const FiniteSSet& x, int n) {
  if (n < 1) throw InvalidArgument("SuspensionCache: step index must be positive");
  const std::lock_guard<std::mutex> guard(mutex_);
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.base == x; });
  if (it == entries_.end()) it = entries_.insert(entries_.end(), Entry{x, {}});
  while (static_cast<int>(it->steps.size()) < n) {
    const FiniteSSet& previous = it->steps.empty() ? it->base : it->steps.back().space;
    it->steps.push_back(reduced_suspension_data(previous));
  }
  return it->steps[static_cast<std::size_t>(n - 1)];
}

FiniteSSet SuspensionCache::iterate(const FiniteSSet& x, int n) {
  if (n < 0) throw InvalidArgument("SuspensionCache: negative iterate");
  if (n == 0) return x;
  return step(x, n).space;
}

ChainMap suspension_comparison(const Suspension& s, bool reduced) {
  const FiniteSSet& y = s.cylinder.left();
  const FiniteSSet& interval = s.cylinder.right();
  const FiniteSSet& sy = s.space;
  const ChainComplex source = reduced ? reduced_normalized_chains(y) : normalized_chains(y);
  const ChainComplex target = loop_shift(reduced ? reduced_normalized_chains(sy) : normalized_chains(sy), 1);
  std::map<int, IntMatrix> blocks;
  for (int k = 0; k <= y.top_dim(); ++k) {
    IntMatrix m(target.rank(k), source.rank(k));
    std::size_t col = 0;
    for (int cell : y.ids_of_dim(k)) {
      if (reduced && k == 0 && cell == *y.basepoint()) continue;
      for (int j = 0; j <= k; ++j) {
        std::vector<int> vertices(static_cast<std::size_t>(k + 2), 1);
        std::fill_n(vertices.begin(), j + 1, 0);
        const Simplex prism = s.cylinder.pair(y.simplex(cell).degenerate(j), simplex_with_vertices(interval, 1, vertices));
        const Simplex image = s.quotient.projection(prism);
        if (image.is_degenerate()) continue;
        const auto row = static_cast<std::size_t>(image.base - sy.first_of_dim(k + 1));
        m(row, col) += (k - j) % 2 == 0 ? 1 : -1;
      }
      ++col;
    }
    blocks.emplace(k, std::move(m));
  }
  return ChainMap(source, target, std::move(blocks));
}

namespace {

StageEvaluator chains_evaluator(std::string name, bool reduced) {
  auto cache = std::make_shared<SuspensionCache>();
  auto eval = [cache, reduced](const FiniteSSet& x, int n) {
    const FiniteSSet y = cache->iterate(x, n);
    return reduced ? reduced_normalized_chains(y) : normalized_chains(y);
  };
  auto structure = [cache, reduced](const FiniteSSet& x, int n) {
    return loop_shift(suspension_comparison(cache->step(x, n + 1), reduced), n);
  };
  return StageEvaluator{std::move(name), std::move(eval), std::move(structure)};
}

}  // namespace

StageEvaluator reduced_chains_evaluator() { return chains_evaluator("reduced-chains", true); }

StageEvaluator unreduced_chains_evaluator() { return chains_evaluator("unreduced-chains", false); }

StageEvaluator l1_mock_evaluator() {
  const StageEvaluator base = reduced_chains_evaluator();
  auto eval = [base](const FiniteSSet& x, int n) { return n <= 1 ? base.eval(x, n) : ChainComplex(); };
  auto structure = [base, eval](const FiniteSSet& x, int n) {
    if (n == 0) return base.structure_map(x, 0);
    return ChainMap::zero(loop_shift(eval(x, n), n), loop_shift(eval(x, n + 1), n + 1));
  };
  return StageEvaluator{"l1-mock", std::move(eval), std::move(structure)};
}

ChainComplex stage(const StageEvaluator& f, const FiniteSSet& x, int n) {
  if (!x.is_pointed()) throw InvalidArgument("stage: the space has no basepoint");
  if (n < 0) throw InvalidArgument("stage: negative stage index");
  return loop_shift(f.eval(x, n), n);
}

Tower tower(const StageEvaluator& f, const FiniteSSet& x, int n) {
  if (n < 1) throw InvalidArgument("tower: needs at least two stages");
  std::vector<ChainComplex> stages;
  for (int k = 0; k <= n; ++k) stages.push_back(stage(f, x, k));
  std::vector<ChainMap> maps;
  for (int k = 0; k < n; ++k) {
    ChainMap m = f.structure_map(x, k);
    const auto uk = static_cast<std::size_t>(k);
    if (!(m.source() == stages[uk]) || !(m.target() == stages[uk + 1]))
      throw InvalidArgument("tower: structure map " + std::to_string(k) + " does not match the stages");
    maps.push_back(std::move(m));
  }
  return Tower(std::move(stages), std::move(maps));
}

ColimitResult p1_approximation(const StageEvaluator& f, const FiniteSSet& x, int n) {
  return sequential_colimit(tower(f, x, n), static_cast<std::size_t>(n));
}

ReducednessCertificate check_reduced(const StageEvaluator& f, int n) {
  ReducednessCertificate cert{f.name, {}, true};
  const FiniteSSet pt = point();
  for (int k = 0; k <= n; ++k) {
    const ChainComplex c = f.eval(pt, k);
    std::vector<HomologyGroup> groups = homology_groups(c, c.low(), c.high());
    cert.reduced = cert.reduced && std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.is_zero(); });
    cert.witness.push_back(std::move(groups));
  }
  return cert;
}

TowerReport tower_report(const StageEvaluator& f, const FiniteSSet& x, int n, int top) {
  TowerReport r;
  r.evaluator = f.name;
  r.top = top;
  const Tower t = tower(f, x, n);
  for (const auto& s : t.stages) r.stage_homology.push_back(homology_groups(s, 0, top));
  for (const auto& m : t.maps) r.map_is_quasi_iso.push_back(quasi_iso(m));
  try {
    r.colimit = sequential_colimit(t, static_cast<std::size_t>(n));
    r.colimit_homology = homology_groups(r.colimit->value, 0, top);
  } catch (const NoStabilization& e) {
    r.failure = e.what();
  }
  return r;
}

}  // namespace simpcalc
