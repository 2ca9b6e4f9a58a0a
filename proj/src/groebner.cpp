#include "polyrank/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace polyrank {

Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  Polynomial remainder;
  while (!p.is_zero()) {
    auto [m, c] = p.leading(order);
    bool reduced = false;
    for (const Polynomial& g : basis) {
      auto [gm, gc] = g.leading(order);
      if (gm.divides(m)) {
        p -= g * Polynomial::term(gm.divide_into(m), c / gc);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial t = Polynomial::term(m, c);
      remainder += t;
      p -= t;
    }
  }
  return remainder;
}

namespace {

Polynomial monic(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading(order).second);
}

Polynomial s_poly(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  auto [fm, fc] = f.leading(order);
  auto [gm, gc] = g.leading(order);
  Monomial l = Monomial::lcm(fm, gm);
  return f * Polynomial::term(fm.divide_into(l), Rational(1) / fc) -
         g * Polynomial::term(gm.divide_into(l), Rational(1) / gc);
}

}  // namespace

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens,
                                       const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  for (Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(monic(g, order));

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Monomial mi = basis[i].leading(order).first;
    Monomial mj = basis[j].leading(order).first;
    // product criterion: coprime leading monomials reduce to zero
    if (Monomial::lcm(mi, mj) == mi * mj) continue;
    Polynomial r = normal_form(s_poly(basis[i], basis[j], order), basis, order);
    if (r.is_zero()) continue;
    basis.push_back(monic(r, order));
    for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // interreduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      Polynomial r = normal_form(basis[i], others, order);
      if (r != basis[i]) {
        changed = true;
        if (r.is_zero()) {
          basis.erase(basis.begin() + i);
          --i;
        } else {
          basis[i] = monic(r, order);
        }
      }
    }
  }

  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading(order).first, b.leading(order).first);
  });
  return basis;
}

Ideal::Ideal(std::vector<Polynomial> gens, MonomialOrder order)
    : gens_(std::move(gens)), order_(std::move(order)) {}

const std::vector<Polynomial>& Ideal::basis() const {
  if (!basis_) basis_ = groebner_basis(gens_, order_);
  return *basis_;
}

Polynomial Ideal::normal_form(const Polynomial& p) const {
  return polyrank::normal_form(p, basis(), order_);
}

bool Ideal::contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

bool Ideal::contains_one() const { return contains(Polynomial{1}); }

std::set<std::string> Ideal::support() const {
  std::set<std::string> s;
  for (const Polynomial& g : gens_)
    for (const std::string& v : g.support()) s.insert(v);
  return s;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  for (const Polynomial& g : a.basis())
    if (!b.contains(g)) return false;
  for (const Polynomial& g : b.basis())
    if (!a.contains(g)) return false;
  return true;
}

Ideal elimination_ideal(const Ideal& ideal, const std::set<std::string>& keep) {
  std::set<std::string> drop;
  for (const std::string& v : ideal.support())
    if (!keep.count(v)) drop.insert(v);
  std::vector<Polynomial> basis =
      groebner_basis(ideal.generators(), MonomialOrder::eliminate(drop));
  std::vector<Polynomial> kept;
  for (const Polynomial& g : basis) {
    bool ok = true;
    for (const std::string& v : g.support())
      if (drop.count(v)) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(g);
  }
  return Ideal(std::move(kept));
}

std::vector<Polynomial> linear_reduce(std::vector<Polynomial> polys) {
  // pivot on the grevlex-largest monomial of each row
  std::vector<Polynomial> rows;
  MonomialOrder order = MonomialOrder::grevlex();
  for (Polynomial p : polys) {
    for (const Polynomial& r : rows) {
      if (p.is_zero()) break;
      auto [rm, rc] = r.leading(order);
      Rational c = p.coeff(rm);
      if (c != 0) p -= r * (c / rc);
    }
    if (!p.is_zero()) {
      rows.push_back(monic(p, order));
      std::sort(rows.begin(), rows.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading(order).first, b.leading(order).first);
      });
    }
  }
  // back-substitute for a canonical echelon set
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows.size(); ++j) {
      if (i == j) continue;
      Rational c = rows[i].coeff(rows[j].leading(order).first);
      if (c != 0) rows[i] -= rows[j] * c;
    }
  }
  return rows;
}

std::vector<Polynomial> bounded_degree_slice(const Ideal& ideal, int d,
                                             const std::set<std::string>& universe) {
  std::vector<Polynomial> products;
  for (const Polynomial& g : ideal.basis()) {
    int gd = g.total_degree();
    if (g.is_zero() || gd > d) continue;
    for (const Monomial& m : monomials_up_to(universe, d - gd))
      products.push_back(g * Polynomial::term(m, 1));
  }
  // multiplying by a monomial cannot lower degree, but guard anyway
  std::erase_if(products, [&](const Polynomial& p) { return p.total_degree() > d; });
  return linear_reduce(std::move(products));
}

}  // namespace polyrank
