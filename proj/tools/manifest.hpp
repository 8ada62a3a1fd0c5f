#pragma once

#include <cstddef>

#include "commands.hpp"
#include "workspace.hpp"

namespace simpcalc::cli {

/// Loads the named spaces, covers, squares and complexes of a manifest into
/// a workspace and runs its task list in order:
///
///   {"spaces": {"X": "boundary2", "Y": {"suspension": "X"}},
///    "covers": {"c": {"space": "X", "u": ["01", "12"], "v": ["02"]}},
///    "squares": {"s": "circle"},
///    "complexes": {"k": {"low": 0, "ranks": [1], "boundaries": [[]]}},
///    "tasks": [{"op": "homology", "space": "Y", "top": 2}, ...]}
///
/// Task ops: space, homology, mv, qcat, mapspace, excision, tower, reduced,
/// counterexample, complex. The result is ok when every task is.
CommandResult run_manifest(const Json& manifest, std::size_t max_enum);

}  // namespace simpcalc::cli
