#pragma once

#include <functional>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "simpcalc/chain_complex.hpp"
#include "simpcalc/excision.hpp"
#include "simpcalc/homology.hpp"
#include "simpcalc/simplicial_set.hpp"

namespace simpcalc {

/// Iterated reduced suspensions of pointed sets, computed once and shared.
/// Safe to use from several threads.
class SuspensionCache {
 public:
  /// The suspension step Σⁿ⁻¹ X -> Σⁿ X (n >= 1).
  Suspension step(const FiniteSSet& x, int n);
  /// Σⁿ X; Σ⁰ X = X.
  FiniteSSet iterate(const FiniteSSet& x, int n);

 private:
  struct Entry {
    FiniteSSet base;
    std::vector<Suspension> steps;
  };
  std::mutex mutex_;
  std::list<Entry> entries_;
};

/// A functor F from pointed simplicial sets to chain complexes, presented by
/// eval(X, n) = F(Σⁿ X) and structure maps Ωⁿ F(Σⁿ X) -> Ωⁿ⁺¹ F(Σⁿ⁺¹ X).
struct StageEvaluator {
  std::string name;
  std::function<ChainComplex(const FiniteSSet&, int)> eval;
  std::function<ChainMap(const FiniteSSet&, int)> structure_map;
};

/// Ñ(Y) -> Ω Ñ(Σ Y), y ↦ the class of the prism y × Δ¹ (shuffle signs).
/// With reduced = false the unreduced chains are used.
ChainMap suspension_comparison(const Suspension& s, bool reduced = true);

/// Reduced normalized chains; structure maps Ωⁿ of suspension_comparison.
StageEvaluator reduced_chains_evaluator();
/// Unreduced normalized chains with the same structure maps; not reduced.
StageEvaluator unreduced_chains_evaluator();
/// Ñ at stages 0 and 1, the zero complex from stage 2 on: the vanishing of
/// the functor on simply connected spaces, built in.
StageEvaluator l1_mock_evaluator();

/// Ωⁿ F(Σⁿ X). Throws InvalidArgument unless X is pointed.
ChainComplex stage(const StageEvaluator& f, const FiniteSSet& x, int n);

/// Stages 0..N with the structure maps. Throws InvalidArgument if N < 1 or
/// a structure map does not go between consecutive stages.
Tower tower(const StageEvaluator& f, const FiniteSSet& x, int n);

/// The colimit of tower(F, X, N). Throws NoStabilization if the tower is not
/// stable within N stages.
ColimitResult p1_approximation(const StageEvaluator& f, const FiniteSSet& x, int n);

struct ReducednessCertificate {
  std::string evaluator;
  /// witness[n] = homology of eval(point, n) in its degrees.
  std::vector<std::vector<HomologyGroup>> witness;
  bool reduced = false;
};

/// Evaluates F on the pointed point at stages 0..N.
ReducednessCertificate check_reduced(const StageEvaluator& f, int n);

struct TowerReport {
  std::string evaluator;
  int top = 0;
  /// stage_homology[n][k] = H_k of stage n, k = 0..top.
  std::vector<std::vector<HomologyGroup>> stage_homology;
  std::vector<bool> map_is_quasi_iso;
  std::optional<ColimitResult> colimit;
  std::string failure;  // why there is no colimit
  /// H_k of the colimit, k = 0..top.
  std::vector<HomologyGroup> colimit_homology;
};

TowerReport tower_report(const StageEvaluator& f, const FiniteSSet& x, int n, int top);

}  // namespace simpcalc
