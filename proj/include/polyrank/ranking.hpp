#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyrank/consequence.hpp"

namespace polyrank {

enum class Status { RealTerminating, IntTerminating, Unknown };

std::string status_str(Status s);

// One round of the lexicographic loop: the QPRF cone found for the formula as
// framed so far.
struct IterationCone {
  std::vector<Polynomial> zeros;
  std::vector<Polynomial> positives;
};

struct Certificate {
  // prf route: a single witness plus the full ranking-function polyhedron
  std::optional<Polynomial> witness;
  std::optional<AlgebraicPolyhedron> prf_set;
  // lprf route: per-iteration QPRF cones
  std::vector<IterationCone> iterations;
};

struct Verdict {
  Status status = Status::Unknown;
  std::string mode;  // "prf" or "lprf"
  int iterations = 0;
  Certificate certificate;
};

struct RankingConfig {
  ConsequenceConfig consequence;
  int max_iterations = 50;
};

// Weakest zero-stable strengthening; termination-equivalent to the input.
TransitionFormula zero_stable_restrict(const TransitionFormula& f,
                                       const RankingConfig& cfg = {});

// All polynomial ranking functions of a zero-stable formula, as an algebraic
// polyhedron; empty vertex set means none were found.
AlgebraicPolyhedron prf_zero_stable(const TransitionFormula& f,
                                    const RankingConfig& cfg = {});

// All quasi-ranking functions of a zero-stable formula.
AlgebraicCone qprf_zero_stable(const TransitionFormula& f, const RankingConfig& cfg = {});

Verdict terminate_prf(const TransitionFormula& f, const RankingConfig& cfg = {});
Verdict terminate_lprf(const TransitionFormula& f, const RankingConfig& cfg = {});
// prf first, lprf on Unknown
Verdict auto_prove(const TransitionFormula& f, const RankingConfig& cfg = {});

}  // namespace polyrank
