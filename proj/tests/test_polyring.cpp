#include <doctest.h>

#include "polyrank/monomial.hpp"
#include "polyrank/polynomial.hpp"
#include "support.hpp"

using namespace polyrank;
using namespace testsupport;

namespace {

// reference grevlex comparison straight from the definition: lower total
// degree first; on ties, the larger exponent in the *last* differing variable
// loses
bool ref_grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  std::set<std::string> vars = a.support();
  for (const std::string& v : b.support()) vars.insert(v);
  std::vector<std::string> order(vars.begin(), vars.end());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int da = a.exponent(*it), db = b.exponent(*it);
    if (da != db) return da > db;
  }
  return false;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  Monomial x = Monomial::var("x"), y = Monomial::var("y");
  Monomial x2y = x * x * y;
  CHECK(x2y.degree() == 3);
  CHECK(x2y.exponent("x") == 2);
  CHECK(x2y.exponent("y") == 1);
  CHECK(x2y.exponent("z") == 0);
  CHECK(x.divides(x2y));
  CHECK(!x2y.divides(x));
  CHECK(x2y.str() == "x^2*y");
  CHECK(Monomial::one().str() == "1");
  CHECK(Monomial::lcm(x * x, x * y) == x * x * y);
}

TEST_CASE("grevlex matches the reference definition") {
  std::mt19937_64 rng(7);
  std::vector<std::string> vars{"x", "y", "z"};
  MonomialOrder grevlex = MonomialOrder::grevlex();
  int trials = 2000;
  for (int t = 0; t < trials; ++t) {
    Monomial a = rand_monomial(rng, vars, 4);
    Monomial b = rand_monomial(rng, vars, 4);
    CHECK(grevlex.less(a, b) == ref_grevlex_less(a, b));
    // strict weak ordering sanity
    CHECK(!(grevlex.less(a, b) && grevlex.less(b, a)));
    if (a == b) CHECK(!grevlex.less(a, b));
  }
  // classic witnesses where grevlex and lex disagree
  Monomial x = Monomial::var("x"), y = Monomial::var("y"), z = Monomial::var("z");
  CHECK(grevlex.less(x * z * z, x * x * y));  // degree tie: last-variable excess loses
  CHECK(grevlex.less(y * y, x * y));
}

TEST_CASE("block elimination order prioritizes eliminated variables") {
  MonomialOrder block = MonomialOrder::eliminate({"t"});
  Monomial t = Monomial::var("t"), x = Monomial::var("x");
  CHECK(block.less(x * x * x, t));        // any power of x is below t
  CHECK(block.less(t, t * t));
  CHECK(!block.less(t, x * x));
}

TEST_CASE("ring axioms hold on random triples") {
  CHECK(check_ring_axioms(1200, 42) == 0);
}

TEST_CASE("polynomial printing round-trips") {
  std::mt19937_64 rng(3);
  std::vector<std::string> vars{"x", "y'", "z"};
  for (int t = 0; t < 500; ++t) {
    Polynomial p = rand_polynomial(rng, vars, 3, 5);
    CHECK(parse_polynomial(p.str()) == p);
  }
  Polynomial q = parse_polynomial("3/2*x^2*y - y' + 1/3");
  CHECK(q.coeff(Monomial::var("x") * Monomial::var("x") * Monomial::var("y")) ==
        Rational(3) / 2);
  CHECK(q.linear_coeff("y'") == -1);
  CHECK(q.constant_term() == Rational(1) / 3);
}

TEST_CASE("prime and substitute") {
  Polynomial p = parse_polynomial("x^2 - x*y + 2");
  CHECK(p.prime() == parse_polynomial("x'^2 - x'*y' + 2"));
  CHECK_THROWS(p.prime().prime());

  std::map<std::string, Polynomial> sigma{{"x", parse_polynomial("y + 1")}};
  CHECK(p.substitute(sigma) == parse_polynomial("(y+1)^2 - (y+1)*y + 2"));

  // substitute/eval commute on random inputs
  std::mt19937_64 rng(11);
  std::vector<std::string> vars{"x", "y"};
  for (int t = 0; t < 300; ++t) {
    Polynomial f = rand_polynomial(rng, vars, 3, 4);
    Polynomial g = rand_polynomial(rng, vars, 2, 3);
    std::map<std::string, Polynomial> sub{{"x", g}};
    std::map<std::string, Rational> v{{"x", rand_coeff(rng)}, {"y", rand_coeff(rng)}};
    std::map<std::string, Rational> w = v;
    w["x"] = g.eval(v);
    CHECK(f.substitute(sub).eval(v) == f.eval(w));
  }
}

TEST_CASE("evaluation requires bound variables") {
  Polynomial p = parse_polynomial("x + y");
  CHECK_THROWS(p.eval({{"x", Rational(1)}}));
  CHECK(p.eval({{"x", Rational(1)}, {"y", Rational(2)}}) == 3);
}

TEST_CASE("monomials_up_to enumerates the simplex") {
  std::set<std::string> vars{"x", "y", "z"};
  // C(3+2, 3) = 10 monomials of degree <= 2 in 3 variables
  CHECK(monomials_up_to(vars, 2).size() == 10);
  CHECK(monomials_up_to(vars, 0).size() == 1);
  auto ms = monomials_up_to({"x"}, 3);
  REQUIRE(ms.size() == 4);
  CHECK(ms.front() == Monomial::one());
}
