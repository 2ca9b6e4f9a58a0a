#include <doctest.h>

#include "polyrank/formula.hpp"
#include "support.hpp"

using namespace polyrank;
using namespace testsupport;

TEST_CASE("parsing the file format") {
  TransitionFormula f = parse_formula(
      "# comment line\n"
      "vars x y;\n"
      "transition:\n"
      "  x >= 0 && (x' == x - 1 || y' != 2*y) && int(x)\n");
  CHECK(f.vars == std::set<std::string>{"x", "y"});
  CHECK(f.all_vars() == std::set<std::string>{"x", "y", "x'", "y'"});
  // print/parse round trip preserves the tree
  TransitionFormula g = parse_formula(print_file(f));
  CHECK(ast_equal(f.root, g.root));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("vars x;\ntransition:\n  q >= 0\n"), ParseError);
  CHECK_THROWS_AS(parse_formula("vars x;\ntransition:\n  x'' == 0\n"), ParseError);
  CHECK_THROWS_AS(parse_formula("vars x\ntransition: x >= 0\n"), ParseError);
  CHECK_THROWS_AS(parse_formula("vars x;\ntransition:\n  x >= \n"), ParseError);
  try {
    parse_formula("vars x;\ntransition:\n  x >= &&\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("corpus files parse and round-trip") {
  for (const std::string& path : corpus_files(CORPUS_DIR)) {
    CAPTURE(path);
    TransitionFormula f = load_loop(path);
    TransitionFormula g = parse_formula(print_file(f));
    CHECK(ast_equal(f.root, g.root));
  }
}

TEST_CASE("dnf preserves truth") {
  auto f1 = parse_formula(
      "vars x y;\ntransition:\n"
      "  !(x >= 0 && y < 1) || (x' == x - 1 && (y == 2 || y != x))\n");
  CHECK(check_dnf_truth(f1, 800, 2) == 0);

  auto f2 = parse_formula(
      "vars x y;\ntransition:\n"
      "  (x > 0 || y <= 0) && !(x' != y') && int(x + y)\n");
  CHECK(check_dnf_truth(f2, 800, 3) == 0);

  // negated int() is weakened, so only the implication direction holds
  auto f3 = parse_formula("vars x;\ntransition:\n  x >= 0 && !int(x)\n");
  CHECK(check_dnf_truth(f3, 400, 4) == 0);
}

TEST_CASE("dnf shapes") {
  auto f = parse_formula("vars x;\ntransition:\n  x == 1 || x >= 2 || x' < 0\n");
  CHECK(dnf(f).size() == 3);

  auto g = parse_formula("vars x y;\ntransition:\n  x != 0 && y != 0\n");
  CHECK(dnf(g).size() == 4);  // two strict splits, crossed

  auto many = parse_formula(
      "vars a b c d e f g;\ntransition:\n"
      "  a != 0 && b != 0 && c != 0 && d != 0 && e != 0 && f != 0 && g != 0\n");
  CHECK_THROWS_AS(dnf(many, 64), ResourceLimitError);
}

TEST_CASE("int atoms evaluate integrality") {
  auto f = parse_formula("vars x;\ntransition:\n  int(x) && x' == x\n");
  std::map<std::string, Rational> half{{"x", Rational(1) / 2}, {"x'", Rational(1) / 2}};
  std::map<std::string, Rational> whole{{"x", Rational(2)}, {"x'", Rational(2)}};
  CHECK(!eval_formula(f, half));
  CHECK(eval_formula(f, whole));
}

TEST_CASE("framing helpers append the right equalities") {
  auto f = parse_formula("vars x y;\ntransition:\n  x >= 0 && x' == x - 1 && y' == y\n");
  auto fz = conjoin_primed_zero(f, {parse_polynomial("x")});
  // x' must now be 0: valuations with x' = -1 are rejected
  std::map<std::string, Rational> v{{"x", Rational(0)},
                                    {"x'", Rational(-1)},
                                    {"y", Rational(1)},
                                    {"y'", Rational(1)}};
  CHECK(eval_formula(f, v));
  CHECK(!eval_formula(fz, v));

  auto ff = conjoin_frame(f, {}, {parse_polynomial("x")});
  // frame x' == x contradicts x' == x - 1
  CHECK(dnf(ff).size() == 1);
  std::map<std::string, Rational> w{{"x", Rational(3)},
                                    {"x'", Rational(2)},
                                    {"y", Rational(0)},
                                    {"y'", Rational(0)}};
  CHECK(eval_formula(f, w));
  CHECK(!eval_formula(ff, w));
}

TEST_CASE("formula degree") {
  CHECK(formula_max_degree(parse_formula("vars x;\ntransition:\n  x >= 0\n")) == 1);
  CHECK(formula_max_degree(
            parse_formula("vars x y;\ntransition:\n  x*y^2 >= x\n")) == 3);
}
