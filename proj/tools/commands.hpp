#pragma once

#include <cstddef>
#include <string>

#include "simpcalc/chain_complex.hpp"
#include "simpcalc/excision.hpp"
#include "simpcalc/serialization.hpp"
#include "simpcalc/simplicial_set.hpp"
#include "simpcalc/tower.hpp"

namespace simpcalc::cli {

/// What a command produced: a structured record, a human rendering and the
/// mathematical verdict that --assert checks.
struct CommandResult {
  Json record;
  std::string text;
  bool ok = true;
};

CommandResult cmd_space(const FiniteSSet& x);
CommandResult cmd_homology(const FiniteSSet& x, int top);
CommandResult cmd_mv(const CoverData& cover, int top);
CommandResult cmd_qcat(const FiniteSSet& x, int d, std::size_t max_enum);
CommandResult cmd_mapspace(const FiniteSSet& c, const std::string& x, const std::string& y, int d,
                           std::size_t max_enum);
CommandResult cmd_excision(const SSetSquare& s);
CommandResult cmd_tower(const StageEvaluator& f, const FiniteSSet& x, int n, int top);
CommandResult cmd_reduced(const StageEvaluator& f, int n);
CommandResult cmd_counterexample();
/// Homology of a complex next to π_n of its Dold–Kan simplicial group.
CommandResult cmd_complex(const ChainComplex& c, int top);

}  // namespace simpcalc::cli
