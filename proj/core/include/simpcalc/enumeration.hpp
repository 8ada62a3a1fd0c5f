#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simpcalc/simplicial_set.hpp"

namespace simpcalc {

inline constexpr std::size_t default_enumeration_limit = 1'000'000;

struct EnumerationOptions {
  /// Candidate assignments tried before EnumerationLimitExceeded is thrown.
  std::size_t max_candidates = default_enumeration_limit;
  /// Only maps sending nondegenerate cells to distinct nondegenerate cells.
  bool injective = false;
};

/// Every simplicial map X -> Y, by backtracking over the cells of X in id
/// order with face-consistency pruning. Basepoints are respected when both
/// sets are pointed. Throws EnumerationLimitExceeded past the budget.
std::vector<SSetMap> enumerate_maps(const FiniteSSet& x, const FiniteSSet& y, const EnumerationOptions& options = {});

/// As enumerate_maps, restricted to maps agreeing with `fixed` wherever it
/// holds a value (one entry per cell of X).
std::vector<SSetMap> enumerate_extensions(const FiniteSSet& x, const FiniteSSet& y,
                                          const std::vector<std::optional<Simplex>>& fixed,
                                          const EnumerationOptions& options = {});

std::size_t count_maps(const FiniteSSet& x, const FiniteSSet& y, const EnumerationOptions& options = {});

/// An isomorphism X -> Y, ignoring names, if one exists.
std::optional<SSetMap> find_isomorphism(const FiniteSSet& x, const FiniteSSet& y,
                                        std::size_t max_candidates = default_enumeration_limit);
bool are_isomorphic(const FiniteSSet& x, const FiniteSSet& y, std::size_t max_candidates = default_enumeration_limit);

}  // namespace simpcalc
