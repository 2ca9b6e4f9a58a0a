#include "polyrank/consequence.hpp"

#include <algorithm>

namespace polyrank {

int effective_degree(const TransitionFormula& f, const ConsequenceConfig& cfg) {
  return cfg.max_degree > 0 ? cfg.max_degree : formula_max_degree(f);
}

namespace {

// degree-bounded restriction of a cone to polynomials over `keep`
AlgebraicCone restrict_cone(const AlgebraicCone& c, const std::set<std::string>& keep,
                            int max_degree) {
  bool inside = std::includes(keep.begin(), keep.end(), c.universe().begin(),
                              c.universe().end());
  if (inside) return c;

  Ideal kept_ideal = elimination_ideal(c.zeros(), keep);
  PolyVRep span = project_members(c, keep, max_degree);
  std::vector<Polynomial> zeros = kept_ideal.generators();
  for (const Polynomial& l : span.lines) zeros.push_back(l);
  return regularize(AlgebraicCone(keep, std::move(zeros), span.rays));
}

}  // namespace

std::optional<AlgebraicCone> cell_cone(const Cell& cell, const std::set<std::string>& keep,
                                       int max_degree) {
  std::set<std::string> universe = keep;
  for (const auto* group : {&cell.eqs, &cell.nonneg, &cell.strict})
    for (const Polynomial& p : *group)
      for (const std::string& v : p.support()) universe.insert(v);

  std::vector<Polynomial> positives = cell.nonneg;
  positives.insert(positives.end(), cell.strict.begin(), cell.strict.end());
  AlgebraicCone cone = regularize(AlgebraicCone(universe, cell.eqs, positives));

  if (cone.is_inconsistent() || cone.member(Polynomial{-1})) return std::nullopt;
  for (const Polynomial& s : cell.strict)
    if (cone.member(-s)) return std::nullopt;

  return restrict_cone(cone, keep, max_degree);
}

AlgebraicCone consequence(const TransitionFormula& f, const std::set<std::string>& keep,
                          const ConsequenceConfig& cfg) {
  int degree = effective_degree(f, cfg);
  std::optional<AlgebraicCone> acc;
  for (const Cell& cell : dnf(f, cfg.max_cells)) {
    std::optional<AlgebraicCone> c = cell_cone(cell, keep, degree);
    if (!c) continue;
    if (!acc)
      acc = std::move(c);
    else
      acc = intersect_cones(*acc, *c, degree);
  }
  if (!acc) return AlgebraicCone::inconsistent(keep);
  return *acc;
}

bool is_unsat(const TransitionFormula& f, const ConsequenceConfig& cfg) {
  return consequence(f, f.all_vars(), cfg).is_inconsistent();
}

}  // namespace polyrank
