#include "polyrank/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyrank {

Monomial Monomial::var(const std::string& name, int exp) {
  Monomial m;
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (exp > 0) m.exps_.emplace_back(name, exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::exponent(const std::string& name) const {
  for (const auto& [v, e] : exps_)
    if (v == name) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = exps_.begin(), b = other.exps_.begin();
  while (a != exps_.end() || b != other.exps_.end()) {
    if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      out.exps_.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      out.exps_.push_back(*b++);
    } else {
      out.exps_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : exps_)
    if (other.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::divide_into(const Monomial& other) const {
  Monomial out;
  for (const auto& [v, e] : other.exps_) {
    int d = e - exponent(v);
    if (d < 0) throw std::invalid_argument("monomial does not divide");
    if (d > 0) out.exps_.emplace_back(v, d);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() || j != b.exps_.end()) {
    if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
      out.exps_.push_back(*i++);
    } else if (i == a.exps_.end() || j->first < i->first) {
      out.exps_.push_back(*j++);
    } else {
      out.exps_.emplace_back(i->first, std::max(i->second, j->second));
      ++i, ++j;
    }
  }
  return out;
}

std::set<std::string> Monomial::support() const {
  std::set<std::string> s;
  for (const auto& [v, e] : exps_) s.insert(v);
  return s;
}

Monomial Monomial::restrict_to(const std::set<std::string>& vars) const {
  Monomial out;
  for (const auto& [v, e] : exps_)
    if (vars.count(v)) out.exps_.emplace_back(v, e);
  return out;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : exps_) {
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // scan variables from largest name downward; the first differing exponent
  // decides, with the *larger* exponent losing
  auto ia = a.exponents().rbegin(), ea = a.exponents().rend();
  auto ib = b.exponents().rbegin(), eb = b.exponents().rend();
  while (ia != ea || ib != eb) {
    if (ib == eb) return true;  // a has a trailing variable b lacks -> a smaller
    if (ia == ea) return false;
    if (ia->first != ib->first) {
      // the larger variable name has exponent 0 in the other monomial
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia, ++ib;
  }
  return false;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Grevlex) return grevlex_less(a, b);
  Monomial ab = a.restrict_to(block_), bb = b.restrict_to(block_);
  if (ab != bb) return grevlex_less(ab, bb);
  std::set<std::string> rest_a = a.support(), rest_b = b.support();
  Monomial ar, br;
  {
    // complement restriction
    Monomial tmp;
    for (const auto& [v, e] : a.exponents())
      if (!block_.count(v)) tmp = tmp * Monomial::var(v, e);
    ar = tmp;
    Monomial tmp2;
    for (const auto& [v, e] : b.exponents())
      if (!block_.count(v)) tmp2 = tmp2 * Monomial::var(v, e);
    br = tmp2;
  }
  return grevlex_less(ar, br);
}

}  // namespace polyrank
