#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyrank/monomial.hpp"
#include "polyrank/rational.hpp"

namespace polyrank {

// Sparse multivariate polynomial over Q.  Canonical: no zero coefficients;
// equality is term-map equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  explicit Polynomial(long c) : Polynomial(Rational(c)) {}

  static Polynomial variable(const std::string& name);
  static Polynomial term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;  // 0 for the zero polynomial
  std::set<std::string> support() const;
  bool is_linear() const { return total_degree() <= 1; }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  // coefficient of a degree-1 variable monomial
  Rational linear_coeff(const std::string& var) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial&) const = default;
  auto operator<=>(const Polynomial&) const = default;

  // replace every variable x with x'; rejects input that already mentions
  // primed variables
  Polynomial prime() const;
  Polynomial substitute(const std::map<std::string, Polynomial>& sigma) const;
  Rational eval(const std::map<std::string, Rational>& v) const;

  // largest term under the given order; pre: nonzero
  std::pair<Monomial, Rational> leading(const MonomialOrder& order) const;

  // terms in descending grevlex order, '*' explicit, rationals as a/b,
  // exponents as x^k; round-trips through parse_polynomial
  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

bool is_primed(const std::string& name);
std::string primed(const std::string& name);
std::string unprimed(const std::string& name);

// Parses the `str()` format (and general +,-,*,^ expressions over idents,
// primed idents and rational literals).  Throws std::runtime_error on bad
// input.
Polynomial parse_polynomial(const std::string& text);

// all monomials over `vars` with total degree <= d, ascending grevlex
std::vector<Monomial> monomials_up_to(const std::set<std::string>& vars, int d);

}  // namespace polyrank
