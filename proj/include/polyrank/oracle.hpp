#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polyrank/formula.hpp"

namespace polyrank {

using Valuation = std::map<std::string, Rational>;

struct OracleConfig {
  long box_lo = -10;
  long box_hi = 10;
  int samples = 500;
  std::uint64_t seed = 1;
  bool integer = true;  // sample integers; false draws small rationals
};

// Up to cfg.samples valuations over X and X' satisfying f.  Cells in update
// form (every primed variable fixed by a linear equality over X) are sampled
// forward; the rest fall back to rejection sampling over the box.
std::vector<Valuation> sample_models(const TransitionFormula& f,
                                     const OracleConfig& cfg = {});

// Greedy execution from v0: repeatedly finds some successor state inside the
// box, up to max_steps transitions.  Returns the visited states, v0 first.
std::vector<Valuation> simulate(const TransitionFormula& f, const Valuation& v0,
                                int max_steps, const OracleConfig& cfg = {});

// Classic Farkas-certificate synthesis of a linear ranking function for a
// single conjunctive cell with linear atoms only.  Uses its own exact simplex;
// shares nothing with the cone machinery.
std::optional<Polynomial> linear_rf_oracle(const Cell& cell);

}  // namespace polyrank
