#include <doctest.h>

#include "polyrank/ranking.hpp"
#include "support.hpp"

using namespace polyrank;
using namespace testsupport;

namespace {

const char* kCountdown = "vars x;\ntransition:\n  x >= 0 && x' == x - 1\n";

AlgebraicCone iteration_cone(const TransitionFormula& f, const IterationCone& it) {
  return AlgebraicCone(f.vars, it.zeros, it.positives);
}

}  // namespace

TEST_CASE("zero-stable restriction propagates forced zeros") {
  auto f = load_loop(std::string(CORPUS_DIR) + "/zero_stable.loop");
  TransitionFormula stable = zero_stable_restrict(f);
  Ideal zeros = consequence(stable, stable.all_vars()).zeros();
  for (const char* z : {"x", "z", "x'", "z'"}) CHECK(zeros.contains(parse_polynomial(z)));
  CHECK(zeros.contains(parse_polynomial("y' - y + 1")));

  // re-running is a fixpoint
  TransitionFormula again = zero_stable_restrict(stable);
  CHECK(ideal_equal(consequence(again, again.all_vars()).zeros(), zeros));

  // a zero-stable input is untouched on the first pass
  auto simple = parse_formula(kCountdown);
  TransitionFormula s2 = zero_stable_restrict(simple);
  CHECK(ideal_equal(consequence(s2, s2.all_vars()).zeros(),
                    consequence(simple, simple.all_vars()).zeros()));
}

TEST_CASE("countdown has the expected ranking set") {
  Verdict v = terminate_prf(parse_formula(kCountdown));
  CHECK(v.status == Status::RealTerminating);
  REQUIRE(v.certificate.witness);
  REQUIRE(v.certificate.prf_set);
  CHECK(polyhedron_member(parse_polynomial("x"), *v.certificate.prf_set));
  CHECK(polyhedron_member(parse_polynomial("2*x + 5"), *v.certificate.prf_set));
  CHECK(!polyhedron_member(parse_polynomial("-x"), *v.certificate.prf_set));
  // the witness is itself in the set
  CHECK(polyhedron_member(*v.certificate.witness, *v.certificate.prf_set));
}

TEST_CASE("prf on an unsatisfiable formula finds a vertex") {
  Verdict v = terminate_prf(parse_formula("vars x;\ntransition:\n  1 <= 0\n"));
  CHECK(v.status == Status::RealTerminating);
  CHECK(v.mode == "prf");
}

TEST_CASE("growing counter has no ranking function") {
  Verdict v = terminate_prf(parse_formula("vars x;\ntransition:\n  x >= 0 && x' == x + 1\n"));
  CHECK(v.status == Status::Unknown);
  Verdict w = terminate_lprf(parse_formula("vars x;\ntransition:\n  x >= 0 && x' == x + 1\n"));
  CHECK(w.status == Status::Unknown);
}

TEST_CASE("quasi ranking cone of the framed two-phase loop") {
  auto f = load_loop(std::string(CORPUS_DIR) + "/xy_lexico.loop");
  Verdict v = terminate_lprf(f);
  REQUIRE(v.status == Status::IntTerminating);
  REQUIRE(v.iterations == 2);
  REQUIRE(v.certificate.iterations.size() == 2);
  AlgebraicCone c1 = iteration_cone(f, v.certificate.iterations[0]);
  AlgebraicCone c2 = iteration_cone(f, v.certificate.iterations[1]);
  CHECK(c1.member(parse_polynomial("y")));
  CHECK(c2.member(parse_polynomial("x - x*y")));
  // nonnegative constants are always quasi-ranking
  CHECK(c1.member(parse_polynomial("5/3")));
  CHECK(c2.member(parse_polynomial("5/3")));
  CHECK(!c1.member(parse_polynomial("-1")));
}

TEST_CASE("qprf cone members are sample-sound") {
  for (const char* name : {"/xy_lexico.loop", "/nz_diminishing.loop", "/lex2_updown.loop"}) {
    auto f = load_loop(std::string(CORPUS_DIR) + name);
    Verdict v = terminate_lprf(f);
    CAPTURE(name);
    CHECK(check_certificate_sound(f, v, 200, 5) == 0);
  }
}

TEST_CASE("auto mode reports the successful strategy") {
  auto prf_loop = parse_formula(kCountdown);
  Verdict a = auto_prove(prf_loop);
  CHECK(a.status == Status::RealTerminating);
  CHECK(a.mode == "prf");

  auto lex = load_loop(std::string(CORPUS_DIR) + "/xy_lexico.loop");
  // no single polynomial ranks both phases
  CHECK(terminate_prf(lex).status == Status::Unknown);
  Verdict b = auto_prove(lex);
  CHECK(b.status == Status::IntTerminating);
  CHECK(b.mode == "lprf");
}

TEST_CASE("iteration cap raises a resource error") {
  RankingConfig cfg;
  cfg.max_iterations = 0;
  CHECK_THROWS_AS(zero_stable_restrict(parse_formula(kCountdown), cfg), ResourceLimitError);
}

TEST_CASE("emitted bounds are never contradicted by real executions") {
  // floor(r(v0)) + 1 transitions is an upper bound on any run from v0
  auto f = parse_formula(kCountdown);
  Verdict v = terminate_prf(f);
  REQUIRE(v.certificate.witness);
  OracleConfig cfg;
  for (long x0 = 0; x0 <= 10; ++x0) {
    Valuation init{{"x", Rational(x0)}};
    auto trace = simulate(f, init, 100, cfg);
    long steps = static_cast<long>(trace.size()) - 1;
    Rational bound = v.certificate.witness->eval(init);
    CHECK(Rational(steps) <= bound + 1);
  }
}
