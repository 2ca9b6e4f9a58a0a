#pragma once

#include <optional>
#include <set>

#include "polyrank/cone.hpp"
#include "polyrank/formula.hpp"

namespace polyrank {

struct ConsequenceConfig {
  int max_degree = 0;  // 0: derive from the formula's atoms
  int max_cells = 64;
};

// Nonnegative cone of a single conjunctive cell over `keep`, or nullopt when
// the cell is inconsistent (its cone is everything).
std::optional<AlgebraicCone> cell_cone(const Cell& cell, const std::set<std::string>& keep,
                                       int max_degree);

// Sound under-approximation of Cn_keep(F): DNF, per-cell cones, fold by
// degree-bounded intersection.  Inconsistent cells are intersection identities;
// if every cell is inconsistent the result is the inconsistent cone.
AlgebraicCone consequence(const TransitionFormula& f, const std::set<std::string>& keep,
                          const ConsequenceConfig& cfg = {});

// true implies F has no real model
bool is_unsat(const TransitionFormula& f, const ConsequenceConfig& cfg = {});

int effective_degree(const TransitionFormula& f, const ConsequenceConfig& cfg);

}  // namespace polyrank
