#include "simpcalc/chain_complex.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "simpcalc/error.hpp"
#include "simpcalc/smith.hpp"

namespace simpcalc {

namespace {

std::size_t uz(int k) { return static_cast<std::size_t>(k); }

std::pair<int, int> joint_range(const ChainComplex& a, const ChainComplex& b) {
  return {std::min(a.low(), b.low()), std::max(a.high(), b.high())};
}

bool all_ones(const IntVector& factors) {
  return std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; });
}

}  // namespace

// ------------------------------------------------------------ ChainComplex

ChainComplex::ChainComplex(int low, std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : low_(low), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.size() != boundaries_.size())
    throw InvalidArgument("ChainComplex: one boundary matrix per degree required");
  if (ranks_.empty()) low_ = 0;
  for (std::size_t k = 0; k < ranks_.size(); ++k) {
    const std::size_t below = k == 0 ? 0 : ranks_[k - 1];
    const IntMatrix& d = boundaries_[k];
    if (d.rows() != below || d.cols() != ranks_[k]) {
      throw InvalidArgument("ChainComplex: boundary in degree " + std::to_string(low_ + static_cast<int>(k)) +
                            " should be " + std::to_string(below) + "x" + std::to_string(ranks_[k]));
    }
    if (k > 0 && !(boundaries_[k - 1] * d).is_zero())
      throw InvalidArgument("ChainComplex: boundary squares to a nonzero map in degree " +
                            std::to_string(low_ + static_cast<int>(k)));
  }
}

ChainComplex ChainComplex::concentrated(int degree, std::size_t rank) {
  return ChainComplex(degree, {rank}, {IntMatrix(0, rank)});
}

std::size_t ChainComplex::rank(int n) const {
  if (n < low() || n > high()) return 0;
  return ranks_[uz(n - low_)];
}

IntMatrix ChainComplex::boundary(int n) const {
  if (n < low() || n > high()) return IntMatrix(rank(n - 1), rank(n));
  return boundaries_[uz(n - low_)];
}

bool ChainComplex::is_zero() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [](std::size_t r) { return r == 0; });
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  const auto [lo, hi] = joint_range(a, b);
  for (int n = lo; n <= hi; ++n) {
    if (a.rank(n) != b.rank(n) || a.boundary(n) != b.boundary(n)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- ChainMap

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  for (const auto& [n, m] : blocks_) {
    if (m.rows() != target_.rank(n) || m.cols() != source_.rank(n))
      throw InvalidArgument("ChainMap: block in degree " + std::to_string(n) + " has the wrong shape");
  }
  for (int n = low(); n <= high() + 1; ++n) {
    if (target_.boundary(n) * block(n) != block(n - 1) * source_.boundary(n))
      throw InvalidArgument("ChainMap: does not commute with the boundary in degree " + std::to_string(n));
  }
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::map<int, IntMatrix> blocks;
  for (int n = c.low(); n <= c.high(); ++n) blocks.emplace(n, IntMatrix::identity(c.rank(n)));
  return ChainMap(c, c, std::move(blocks));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) { return ChainMap(source, target, {}); }

IntMatrix ChainMap::block(int n) const {
  auto it = blocks_.find(n);
  if (it != blocks_.end()) return it->second;
  return IntMatrix(target_.rank(n), source_.rank(n));
}

int ChainMap::low() const { return joint_range(source_, target_).first; }
int ChainMap::high() const { return joint_range(source_, target_).second; }

bool ChainMap::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& e) { return e.second.is_zero(); });
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
  for (int n = a.low(); n <= a.high(); ++n)
    if (a.block(n) != b.block(n)) return false;
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source())) throw InvalidArgument("compose: chain maps are not composable");
  std::map<int, IntMatrix> blocks;
  const int lo = std::min(f.low(), g.low());
  const int hi = std::max(f.high(), g.high());
  for (int n = lo; n <= hi; ++n) blocks.emplace(n, g.block(n) * f.block(n));
  return ChainMap(f.source(), g.target(), std::move(blocks));
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw InvalidArgument("chain map sum: different source or target");
  std::map<int, IntMatrix> blocks;
  for (int n = a.low(); n <= a.high(); ++n) blocks.emplace(n, a.block(n) + b.block(n));
  return ChainMap(a.source(), a.target(), std::move(blocks));
}

ChainMap operator-(const ChainMap& a) {
  std::map<int, IntMatrix> blocks;
  for (int n = a.low(); n <= a.high(); ++n) blocks.emplace(n, -a.block(n));
  return ChainMap(a.source(), a.target(), std::move(blocks));
}

ChainMap operator-(const ChainMap& a, const ChainMap& b) { return a + (-b); }

// ------------------------------------------------------------ direct sums

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  const auto [lo, hi] = joint_range(a, b);
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(a.rank(n) + b.rank(n));
    IntMatrix d = IntMatrix::block_diagonal(a.boundary(n), b.boundary(n));
    if (n == lo) d = IntMatrix(0, ranks.back());
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(lo, std::move(ranks), std::move(boundaries));
}

namespace {

enum class Slot { first, second };

ChainMap inclusion(const ChainComplex& a, const ChainComplex& b, Slot slot) {
  const ChainComplex sum = direct_sum(a, b);
  const ChainComplex& part = slot == Slot::first ? a : b;
  std::map<int, IntMatrix> blocks;
  for (int n = sum.low(); n <= sum.high(); ++n) {
    IntMatrix m(sum.rank(n), part.rank(n));
    m.set_block(slot == Slot::first ? 0 : a.rank(n), 0, IntMatrix::identity(part.rank(n)));
    blocks.emplace(n, std::move(m));
  }
  return ChainMap(part, sum, std::move(blocks));
}

ChainMap projection(const ChainComplex& a, const ChainComplex& b, Slot slot) {
  const ChainComplex sum = direct_sum(a, b);
  const ChainComplex& part = slot == Slot::first ? a : b;
  std::map<int, IntMatrix> blocks;
  for (int n = sum.low(); n <= sum.high(); ++n) {
    IntMatrix m(part.rank(n), sum.rank(n));
    m.set_block(0, slot == Slot::first ? 0 : a.rank(n), IntMatrix::identity(part.rank(n)));
    blocks.emplace(n, std::move(m));
  }
  return ChainMap(sum, part, std::move(blocks));
}

}  // namespace

ChainMap first_inclusion(const ChainComplex& a, const ChainComplex& b) { return inclusion(a, b, Slot::first); }
ChainMap second_inclusion(const ChainComplex& a, const ChainComplex& b) { return inclusion(a, b, Slot::second); }
ChainMap first_projection(const ChainComplex& a, const ChainComplex& b) { return projection(a, b, Slot::first); }
ChainMap second_projection(const ChainComplex& a, const ChainComplex& b) { return projection(a, b, Slot::second); }

ChainMap map_into_sum(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source())) throw InvalidArgument("map_into_sum: different sources");
  const ChainComplex sum = direct_sum(f.target(), g.target());
  std::map<int, IntMatrix> blocks;
  const int lo = std::min(f.low(), g.low());
  const int hi = std::max(f.high(), g.high());
  for (int n = lo; n <= hi; ++n) blocks.emplace(n, IntMatrix::vstack(f.block(n), g.block(n)));
  return ChainMap(f.source(), sum, std::move(blocks));
}

ChainMap map_from_sum(const ChainMap& f, const ChainMap& g) {
  if (!(f.target() == g.target())) throw InvalidArgument("map_from_sum: different targets");
  const ChainComplex sum = direct_sum(f.source(), g.source());
  std::map<int, IntMatrix> blocks;
  const int lo = std::min(f.low(), g.low());
  const int hi = std::max(f.high(), g.high());
  for (int n = lo; n <= hi; ++n) blocks.emplace(n, IntMatrix::hstack(f.block(n), g.block(n)));
  return ChainMap(sum, f.target(), std::move(blocks));
}

// ------------------------------------------------------------------ shifts

ChainComplex loop_shift(const ChainComplex& c, int times) {
  if (c.ranks().empty()) return c;
  std::vector<IntMatrix> boundaries;
  for (int n = c.low(); n <= c.high(); ++n) boundaries.push_back(c.boundary(n));
  return ChainComplex(c.low() - times, c.ranks(), std::move(boundaries));
}

ChainMap loop_shift(const ChainMap& f, int times) {
  std::map<int, IntMatrix> blocks;
  for (int n = f.low(); n <= f.high(); ++n) blocks.emplace(n - times, f.block(n));
  return ChainMap(loop_shift(f.source(), times), loop_shift(f.target(), times), std::move(blocks));
}

// -------------------------------------------------------------------- cones

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& s = f.source();
  const ChainComplex& t = f.target();
  const int lo = std::min(t.low(), s.low() + 1);
  const int hi = std::max(t.high(), s.high() + 1);
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(t.rank(n) + s.rank(n - 1));
    IntMatrix d(t.rank(n - 1) + s.rank(n - 2), ranks.back());
    if (n > lo) {
      d.set_block(0, 0, t.boundary(n));
      d.set_block(0, t.rank(n), f.block(n - 1));
      d.set_block(t.rank(n - 1), t.rank(n), -s.boundary(n - 1));
    } else {
      d = IntMatrix(0, ranks.back());
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(lo, std::move(ranks), std::move(boundaries));
}

bool is_acyclic(const ChainComplex& c) {
  if (c.ranks().empty()) return true;
  std::vector<IntVector> factors;
  for (int n = c.low(); n <= c.high() + 1; ++n) factors.push_back(invariant_factors(c.boundary(n)));
  for (int n = c.low(); n <= c.high(); ++n) {
    const auto& in = factors[uz(n - c.low() + 1)];
    const auto& out = factors[uz(n - c.low())];
    if (c.rank(n) != in.size() + out.size() || !all_ones(in)) return false;
  }
  return true;
}

bool quasi_iso(const ChainMap& f) { return is_acyclic(mapping_cone(f)); }

bool is_isomorphism(const ChainMap& f) {
  for (int n = f.low(); n <= f.high(); ++n) {
    const IntMatrix b = f.block(n);
    if (!b.is_square()) return false;
    if (b.rows() > 0 && !is_unimodular(b)) return false;
  }
  return true;
}

// ------------------------------------------------------------------ squares

ChainSquare::ChainSquare(ChainMap wu, ChainMap wv, ChainMap ux, ChainMap vx)
    : w_to_u(std::move(wu)), w_to_v(std::move(wv)), u_to_x(std::move(ux)), v_to_x(std::move(vx)) {
  if (!(w_to_u.source() == w_to_v.source()) || !(u_to_x.source() == w_to_u.target()) ||
      !(v_to_x.source() == w_to_v.target()) || !(u_to_x.target() == v_to_x.target())) {
    throw InvalidArgument("ChainSquare: corners do not match");
  }
  if (!(compose(u_to_x, w_to_u) == compose(v_to_x, w_to_v)))
    throw NonCommutingDiagram("ChainSquare: the two composites W -> X differ");
}

ChainComplex total_complex(const ChainSquare& s) {
  // cone of cone(W -> U ⊕ V) -> X, with W -> U ⊕ V given by (i, -j)
  const ChainMap alpha = map_into_sum(s.w_to_u, -s.w_to_v);
  const ChainMap beta = map_from_sum(s.u_to_x, s.v_to_x);
  const ChainComplex inner = mapping_cone(alpha);
  std::map<int, IntMatrix> blocks;
  for (int n = inner.low(); n <= inner.high(); ++n) {
    IntMatrix m(s.x().rank(n), inner.rank(n));
    m.set_block(0, 0, beta.block(n));
    blocks.emplace(n, std::move(m));
  }
  return mapping_cone(ChainMap(inner, s.x(), std::move(blocks)));
}

bool is_homotopy_bicartesian(const ChainSquare& s) { return is_acyclic(total_complex(s)); }

// --------------------------------------------------------------- exactness

bool ExactnessReport::all_exact() const {
  return std::all_of(entries.begin(), entries.end(), [](const ExactnessEntry& e) { return e.exact; });
}

bool ExactnessReport::exact_at(std::size_t slot) const {
  return std::all_of(entries.begin(), entries.end(),
                     [slot](const ExactnessEntry& e) { return e.slot != slot || e.exact; });
}

ExactnessReport check_exact_sequence(const std::vector<ChainMap>& maps, int low, int high) {
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    if (!(maps[k].target() == maps[k + 1].source()))
      throw InvalidArgument("check_exact_sequence: maps " + std::to_string(k) + " and " + std::to_string(k + 1) +
                            " are not composable");
    if (!compose(maps[k + 1], maps[k]).is_zero())
      throw NonZeroComposite("check_exact_sequence: composite of maps " + std::to_string(k) + " and " +
                             std::to_string(k + 1) + " is nonzero");
  }
  ExactnessReport report;
  for (std::size_t slot = 1; slot < maps.size(); ++slot) {
    for (int n = low; n <= high; ++n) {
      const IntMatrix in = maps[slot - 1].block(n);
      const IntMatrix out = maps[slot].block(n);
      const IntVector factors = invariant_factors(in);
      // im(in) ⊂ ker(out); equal iff the ranks match and im(in) is saturated
      const bool exact = factors.size() + matrix_rank(out) == maps[slot].source().rank(n) && all_ones(factors);
      report.entries.push_back({slot, n, exact});
    }
  }
  return report;
}

// ------------------------------------------------------------------- towers

Tower::Tower(std::vector<ChainComplex> stages_, std::vector<ChainMap> maps_)
    : stages(std::move(stages_)), maps(std::move(maps_)) {
  if (stages.empty() || maps.size() + 1 != stages.size())
    throw InvalidArgument("Tower: need one map between each pair of consecutive stages");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (!(maps[k].source() == stages[k]) || !(maps[k].target() == stages[k + 1]))
      throw InvalidArgument("Tower: map " + std::to_string(k) + " does not connect stages " + std::to_string(k) +
                            " and " + std::to_string(k + 1));
  }
}

ColimitResult sequential_colimit(const Tower& t, std::size_t probe) {
  const std::size_t last = t.stages.size() - 1;
  if (last == 0) throw NoStabilization("sequential_colimit: a single stage cannot witness stabilization");
  std::vector<char> zero(t.stages.size()), iso(t.maps.size()), quasi(t.maps.size());
  for (std::size_t k = 0; k <= last; ++k) zero[k] = t.stages[k].is_zero();
  for (std::size_t k = 0; k < last; ++k) {
    iso[k] = is_isomorphism(t.maps[k]);
    quasi[k] = iso[k] || quasi_iso(t.maps[k]);
  }
  auto tail = [](const std::vector<char>& flags, std::size_t from) {
    return std::all_of(flags.begin() + static_cast<std::ptrdiff_t>(from), flags.end(), [](char c) { return c != 0; });
  };
  for (std::size_t k = 0; k <= std::min(probe, last - 1); ++k) {
    if (tail(zero, k)) return {ChainComplex(), k, Stabilization::zero_tail};
    if (tail(iso, k)) return {t.stages[k], k, Stabilization::isomorphisms};
    if (tail(quasi, k)) return {t.stages[k], k, Stabilization::quasi_isomorphisms};
  }
  throw NoStabilization("sequential_colimit: the tower does not stabilize within " + std::to_string(probe) +
                        " stages");
}

// -------------------------------------------------------------------- norms

RealChain::RealChain(std::vector<std::pair<int, double>> coefficients_) : coefficients(std::move(coefficients_)) {
  std::set<int> seen;
  for (const auto& [id, a] : coefficients)
    if (!seen.insert(id).second) throw InvalidArgument("RealChain: basis element " + std::to_string(id) + " repeats");
}

double l1_norm(const RealChain& chain) {
  double total = 0.0;
  for (const auto& [id, a] : chain.coefficients) total += std::fabs(a);
  return total;
}

Integer boundary_operator_norm(const ChainComplex& c, int n) {
  const IntMatrix d = c.boundary(n);
  Integer best = 0;
  for (std::size_t col = 0; col < d.cols(); ++col) {
    Integer mass = 0;
    for (std::size_t row = 0; row < d.rows(); ++row) mass += abs(d(row, col));
    if (mass > best) best = mass;
  }
  return best;
}

}  // namespace simpcalc
