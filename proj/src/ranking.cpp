#include "polyrank/ranking.hpp"

#include <algorithm>

namespace polyrank {

std::string status_str(Status s) {
  switch (s) {
    case Status::RealTerminating: return "RealTerminating";
    case Status::IntTerminating: return "IntTerminating";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

TransitionFormula zero_stable_restrict(const TransitionFormula& f,
                                       const RankingConfig& cfg) {
  TransitionFormula cur = f;
  Ideal zeros = consequence(cur, f.vars, cfg.consequence).zeros();
  for (int i = 0; i < cfg.max_iterations; ++i) {
    if (!zeros.basis().empty()) cur = conjoin_primed_zero(cur, zeros.basis());
    Ideal next = consequence(cur, f.vars, cfg.consequence).zeros();
    if (ideal_equal(next, zeros)) return cur;
    zeros = std::move(next);
  }
  throw ResourceLimitError("zero-stable restriction did not stabilize");
}

namespace {

struct TemplateResult {
  std::vector<Polynomial> rays;      // back in Q[X]
  std::vector<Polynomial> vertices;  // back in Q[X], before any shift
};

// Shared pipeline of prf/qprf synthesis: compute the linear preimage of the
// primed-consequence cone under y_p -> p - p', intersect with the polyhedron
// of nonnegative y-coefficients and fixed constant coefficient, then
// substitute y_p -> p.
TemplateResult ranking_template(const TransitionFormula& f,
                                const std::vector<Polynomial>& positives,
                                const Rational& constant_vertex,
                                const RankingConfig& cfg) {
  std::vector<std::string> ynames;
  std::map<std::string, Polynomial> images;
  std::map<std::string, Polynomial> back;
  for (size_t i = 0; i < positives.size(); ++i) {
    std::string y = "_y" + std::to_string(i);
    ynames.push_back(y);
    images.emplace(y, positives[i] - positives[i].prime());
    back.emplace(y, positives[i]);
  }

  AlgebraicCone primed = consequence(f, f.all_vars(), cfg.consequence);
  PolyVRep pre = linear_preimage(primed, images);

  MonomialBasis basis;
  basis.add(Monomial::one());
  for (const std::string& y : ynames) basis.add(Monomial::var(y));

  auto to_vpoly = [&](const PolyVRep& rep) {
    VPolyhedron p;
    p.dim = basis.size();
    for (const Polynomial& v : rep.vertices) p.vertices.push_back(basis.to_vec(v));
    for (const Polynomial& r : rep.rays) p.rays.push_back(basis.to_vec(r));
    for (const Polynomial& l : rep.lines) p.lines.push_back(basis.to_vec(l));
    if (rep.empty) p.vertices.clear();
    return p;
  };

  VPolyhedron preimage = to_vpoly(pre);

  VPolyhedron templ;
  templ.dim = basis.size();
  {
    Vec v = Vec::Zero(basis.size());
    v[0] = constant_vertex;
    templ.vertices.push_back(std::move(v));
    for (size_t i = 0; i < ynames.size(); ++i) {
      Vec r = Vec::Zero(basis.size());
      r[1 + static_cast<Eigen::Index>(i)] = 1;
      templ.rays.push_back(std::move(r));
    }
  }

  VPolyhedron meet = intersect(preimage, templ);

  TemplateResult out;
  for (const Vec& r : meet.rays)
    out.rays.push_back(basis.to_poly(r).substitute(back));
  for (const Vec& v : meet.vertices)
    out.vertices.push_back(basis.to_poly(v).substitute(back));
  return out;
}

}  // namespace

AlgebraicPolyhedron prf_zero_stable(const TransitionFormula& f, const RankingConfig& cfg) {
  AlgebraicCone bounded = consequence(f, f.vars, cfg.consequence);
  TemplateResult t = ranking_template(f, bounded.positives(), Rational(-1), cfg);

  AlgebraicPolyhedron out;
  out.universe = f.vars;
  out.zeros = bounded.zeros();
  out.positives = std::move(t.rays);
  for (const Polynomial& v : t.vertices) out.vertices.push_back(Polynomial{1} + v);
  return out;
}

AlgebraicCone qprf_zero_stable(const TransitionFormula& f, const RankingConfig& cfg) {
  AlgebraicCone bounded = consequence(f, f.vars, cfg.consequence);
  if (bounded.is_inconsistent()) return bounded;
  TemplateResult t = ranking_template(f, bounded.positives(), Rational(0), cfg);
  return AlgebraicCone(f.vars, bounded.zeros().generators(), t.rays);
}

Verdict terminate_prf(const TransitionFormula& f, const RankingConfig& cfg) {
  Verdict v;
  v.mode = "prf";
  TransitionFormula stable = zero_stable_restrict(f, cfg);
  AlgebraicPolyhedron set = prf_zero_stable(stable, cfg);
  if (set.is_empty()) {
    v.status = Status::Unknown;
    return v;
  }
  v.status = Status::RealTerminating;
  // deterministic witness: lexicographically smallest printed vertex
  const Polynomial* best = &set.vertices.front();
  for (const Polynomial& cand : set.vertices)
    if (cand.str() < best->str()) best = &cand;
  v.certificate.witness = *best;
  v.certificate.prf_set = std::move(set);
  return v;
}

Verdict terminate_lprf(const TransitionFormula& f, const RankingConfig& cfg) {
  Verdict v;
  v.mode = "lprf";
  TransitionFormula cur = f;
  Ideal progress = consequence(cur, f.all_vars(), cfg.consequence).zeros();
  for (int k = 1; k <= cfg.max_iterations; ++k) {
    TransitionFormula stable = zero_stable_restrict(cur, cfg);
    AlgebraicCone qprf = qprf_zero_stable(stable, cfg);
    if (qprf.is_inconsistent()) {
      v.status = Status::IntTerminating;
      v.iterations = k - 1;
      return v;
    }

    IterationCone iter;
    iter.zeros = qprf.zeros().basis();
    for (const Polynomial& p : qprf.positives())
      if (!p.is_constant()) iter.positives.push_back(p);
    v.certificate.iterations.push_back(iter);

    cur = conjoin_frame(cur, iter.zeros, iter.positives);
    v.iterations = k;

    Ideal next = consequence(cur, f.all_vars(), cfg.consequence).zeros();
    if (next.contains_one()) {
      v.status = Status::IntTerminating;
      return v;
    }
    if (ideal_equal(next, progress)) {
      v.status = Status::Unknown;
      return v;
    }
    progress = std::move(next);
  }
  throw ResourceLimitError("lexicographic ranking loop hit the iteration cap");
}

Verdict auto_prove(const TransitionFormula& f, const RankingConfig& cfg) {
  Verdict v = terminate_prf(f, cfg);
  if (v.status != Status::Unknown) return v;
  return terminate_lprf(f, cfg);
}

}  // namespace polyrank
