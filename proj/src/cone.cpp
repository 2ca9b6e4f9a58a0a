#include "polyrank/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyrank {

Eigen::Index MonomialBasis::add(const Monomial& m) {
  auto it = index_.find(m);
  if (it != index_.end()) return it->second;
  Eigen::Index i = size();
  mons_.push_back(m);
  index_[m] = i;
  return i;
}

void MonomialBasis::add_support(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) add(m);
}

Eigen::Index MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::invalid_argument("monomial not in basis: " + m.str());
  return it->second;
}

Vec MonomialBasis::to_vec(const Polynomial& p) const {
  Vec v = Vec::Zero(size());
  for (const auto& [m, c] : p.terms()) v[index_of(m)] = c;
  return v;
}

Polynomial MonomialBasis::to_poly(const Vec& v) const {
  Polynomial p;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) p += Polynomial::term(mons_[static_cast<size_t>(i)], v[i]);
  return p;
}

AlgebraicCone::AlgebraicCone(std::set<std::string> universe,
                             std::vector<Polynomial> zeros,
                             std::vector<Polynomial> positives)
    : universe_(std::move(universe)), zeros_(Ideal(std::move(zeros))) {
  std::vector<Polynomial> ps;
  ps.push_back(Polynomial{1});
  for (const Polynomial& p : positives) {
    Polynomial nf = zeros_.normal_form(p);
    if (!nf.is_zero()) ps.push_back(std::move(nf));
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  positives_ = std::move(ps);
}

AlgebraicCone AlgebraicCone::inconsistent(std::set<std::string> universe) {
  return AlgebraicCone(std::move(universe), {Polynomial{1}}, {Polynomial{1}});
}

namespace {

// feasibility of {x : eqs, ineqs} via double description
bool feasible(const HPolyhedron& h) { return !h_to_v(h).is_empty(); }

}  // namespace

bool AlgebraicCone::member(const Polynomial& p) const {
  Polynomial target = zeros_.normal_form(p);
  if (target.is_zero()) return true;
  MonomialBasis basis;
  basis.add_support(target);
  for (const Polynomial& q : positives_) basis.add_support(q);
  std::vector<Vec> rays;
  for (const Polynomial& q : positives_) rays.push_back(basis.to_vec(q));
  return polyrank::member(basis.to_vec(target),
                          VPolyhedron::cone(basis.size(), std::move(rays)));
}

AlgebraicCone regularize(const AlgebraicCone& c) {
  AlgebraicCone cur = c;
  for (;;) {
    MonomialBasis basis;
    for (const Polynomial& p : cur.positives()) basis.add_support(p);
    std::vector<Vec> rays;
    for (const Polynomial& p : cur.positives()) rays.push_back(basis.to_vec(p));
    VPolyhedron cone = VPolyhedron::cone(basis.size(), std::move(rays));
    VPolyhedron minimal = h_to_v(v_to_h(cone));
    if (minimal.lines.empty()) return cur;
    std::vector<Polynomial> zeros = cur.zeros().generators();
    for (const Vec& l : minimal.lines) zeros.push_back(basis.to_poly(l));
    AlgebraicCone next(cur.universe(), std::move(zeros), cur.positives());
    if (ideal_equal(next.zeros(), cur.zeros())) return cur;
    cur = std::move(next);
  }
}

namespace {

// Shared core of linearize / linear_preimage: the polyhedron of coefficient
// vectors (a_t) over `targets` such that sum a_t * image_t lands in the cone.
PolyVRep linear_solutions(const AlgebraicCone& c,
                          const std::vector<std::pair<Monomial, Polynomial>>& targets) {
  std::vector<Polynomial> target_nf, pos_nf;
  for (const auto& [m, img] : targets) target_nf.push_back(c.zeros().normal_form(img));
  for (const Polynomial& p : c.positives()) pos_nf.push_back(c.zeros().normal_form(p));

  MonomialBasis support;
  for (const Polynomial& p : target_nf) support.add_support(p);
  for (const Polynomial& p : pos_nf) support.add_support(p);

  Eigen::Index nt = static_cast<Eigen::Index>(targets.size());
  Eigen::Index np = static_cast<Eigen::Index>(pos_nf.size());
  Eigen::Index dim = nt + np;

  HPolyhedron h;
  h.dim = dim;
  for (Eigen::Index u = 0; u < support.size(); ++u) {
    const Monomial& mon = support.monomial(u);
    Vec row = Vec::Zero(dim);
    for (Eigen::Index t = 0; t < nt; ++t) row[t] = target_nf[static_cast<size_t>(t)].coeff(mon);
    for (Eigen::Index i = 0; i < np; ++i)
      row[nt + i] = -pos_nf[static_cast<size_t>(i)].coeff(mon);
    h.eqs.emplace_back(std::move(row), Rational(0));
  }
  for (Eigen::Index i = 0; i < np; ++i) {
    Vec row = Vec::Zero(dim);
    row[nt + i] = 1;
    h.ineqs.emplace_back(std::move(row), Rational(0));
  }

  std::vector<Eigen::Index> keep(static_cast<size_t>(nt));
  for (Eigen::Index t = 0; t < nt; ++t) keep[static_cast<size_t>(t)] = t;
  VPolyhedron sol = project(h_to_v(h), keep);

  MonomialBasis out_basis;
  for (const auto& [m, img] : targets) out_basis.add(m);
  PolyVRep out;
  out.empty = sol.is_empty();
  for (const Vec& v : sol.vertices) out.vertices.push_back(out_basis.to_poly(v));
  for (const Vec& v : sol.rays) out.rays.push_back(out_basis.to_poly(v));
  for (const Vec& v : sol.lines) out.lines.push_back(out_basis.to_poly(v));
  return out;
}

}  // namespace

PolyVRep linearize(const AlgebraicCone& c) {
  std::vector<std::pair<Monomial, Polynomial>> targets;
  targets.emplace_back(Monomial::one(), Polynomial{1});
  for (const std::string& x : c.universe())
    targets.emplace_back(Monomial::var(x), Polynomial::variable(x));
  return linear_solutions(c, targets);
}

PolyVRep linear_preimage(const AlgebraicCone& c,
                         const std::map<std::string, Polynomial>& images) {
  std::vector<std::pair<Monomial, Polynomial>> targets;
  targets.emplace_back(Monomial::one(), Polynomial{1});
  for (const auto& [y, img] : images) targets.emplace_back(Monomial::var(y), img);
  return linear_solutions(c, targets);
}

PolyVRep project_members(const AlgebraicCone& c, const std::set<std::string>& keep,
                         int max_degree) {
  std::vector<std::pair<Monomial, Polynomial>> targets;
  for (const Monomial& m : monomials_up_to(keep, max_degree))
    targets.emplace_back(m, Polynomial::term(m, 1));
  return linear_solutions(c, targets);
}

AlgebraicCone intersect_cones(const AlgebraicCone& a, const AlgebraicCone& b,
                              int max_degree) {
  std::set<std::string> universe = a.universe();
  universe.insert(b.universe().begin(), b.universe().end());

  MonomialBasis basis;
  for (const Monomial& m : monomials_up_to(universe, max_degree)) basis.add(m);

  auto bounded_cone = [&](const AlgebraicCone& c) {
    std::vector<Vec> rays, lines;
    for (const Polynomial& p : c.positives())
      if (p.total_degree() <= max_degree) rays.push_back(basis.to_vec(p));
    for (const Polynomial& z : bounded_degree_slice(c.zeros(), max_degree, universe))
      lines.push_back(basis.to_vec(z));
    return VPolyhedron::cone(basis.size(), std::move(rays), std::move(lines));
  };

  VPolyhedron meet = intersect(bounded_cone(a), bounded_cone(b));
  std::vector<Polynomial> zeros, positives;
  for (const Vec& l : meet.lines) zeros.push_back(basis.to_poly(l));
  for (const Vec& r : meet.rays) positives.push_back(basis.to_poly(r));
  return AlgebraicCone(std::move(universe), std::move(zeros), std::move(positives));
}

bool polyhedron_member(const Polynomial& p, const AlgebraicPolyhedron& a) {
  if (a.is_empty()) return false;
  Polynomial target = a.zeros.normal_form(p);
  std::vector<Polynomial> pos_nf, vert_nf;
  for (const Polynomial& q : a.positives) pos_nf.push_back(a.zeros.normal_form(q));
  for (const Polynomial& v : a.vertices) vert_nf.push_back(a.zeros.normal_form(v));

  MonomialBasis support;
  support.add_support(target);
  for (const Polynomial& q : pos_nf) support.add_support(q);
  for (const Polynomial& q : vert_nf) support.add_support(q);

  Eigen::Index np = static_cast<Eigen::Index>(pos_nf.size());
  Eigen::Index nv = static_cast<Eigen::Index>(vert_nf.size());
  Eigen::Index dim = np + nv;

  HPolyhedron h;
  h.dim = dim;
  for (Eigen::Index u = 0; u < support.size(); ++u) {
    const Monomial& mon = support.monomial(u);
    Vec row = Vec::Zero(dim);
    for (Eigen::Index i = 0; i < np; ++i) row[i] = pos_nf[static_cast<size_t>(i)].coeff(mon);
    for (Eigen::Index j = 0; j < nv; ++j)
      row[np + j] = vert_nf[static_cast<size_t>(j)].coeff(mon);
    h.eqs.emplace_back(std::move(row), target.coeff(mon));
  }
  {
    Vec row = Vec::Zero(dim);
    for (Eigen::Index j = 0; j < nv; ++j) row[np + j] = 1;
    h.eqs.emplace_back(std::move(row), Rational(1));
  }
  for (Eigen::Index i = 0; i < dim; ++i) {
    Vec row = Vec::Zero(dim);
    row[i] = 1;
    h.ineqs.emplace_back(std::move(row), Rational(0));
  }
  return feasible(h);
}

}  // namespace polyrank
