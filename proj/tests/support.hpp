#pragma once

// Shared randomized-property helpers.  Each checker returns a violation count
// so the same code backs both the unit suites and the acceptance gate.

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyrank/consequence.hpp"
#include "polyrank/groebner.hpp"
#include "polyrank/oracle.hpp"
#include "polyrank/polyhedron.hpp"
#include "polyrank/ranking.hpp"

namespace testsupport {

using namespace polyrank;

inline Rational rand_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 2);
  return Rational(num(rng)) / den(rng);
}

inline Monomial rand_monomial(std::mt19937_64& rng, const std::vector<std::string>& vars,
                              int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg);
  Monomial m = Monomial::one();
  int budget = max_deg;
  for (const std::string& v : vars) {
    int k = std::min(e(rng), budget);
    budget -= k;
    for (int i = 0; i < k; ++i) m = m * Monomial::var(v);
  }
  return m;
}

inline Polynomial rand_polynomial(std::mt19937_64& rng,
                                  const std::vector<std::string>& vars, int max_deg,
                                  int max_terms) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  Polynomial p;
  int n = nt(rng);
  for (int i = 0; i < n; ++i)
    p += Polynomial::term(rand_monomial(rng, vars, max_deg), rand_coeff(rng));
  return p;
}

// ---- ring axioms ----------------------------------------------------------

inline int check_ring_axioms(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> vars{"x", "y", "z"};
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    Polynomial a = rand_polynomial(rng, vars, 3, 4);
    Polynomial b = rand_polynomial(rng, vars, 3, 4);
    Polynomial c = rand_polynomial(rng, vars, 3, 4);
    if ((a + b) + c != a + (b + c)) ++bad;
    if (a + b != b + a) ++bad;
    if (a * b != b * a) ++bad;
    if ((a * b) * c != a * (b * c)) ++bad;
    if (a * (b + c) != a * b + a * c) ++bad;
    if (a - a != Polynomial()) ++bad;
    if (a * Polynomial{1} != a) ++bad;
    if (a * Polynomial{0} != Polynomial()) ++bad;
    if (parse_polynomial(a.str()) != a) ++bad;
  }
  return bad;
}

// ---- Groebner -------------------------------------------------------------

// Independent exact Gaussian elimination: is `target` a Q-linear combination
// of `gens`?  (No shared code with the library's linear_reduce.)
inline bool linear_solvable(const std::vector<Polynomial>& gens, const Polynomial& target) {
  std::vector<Monomial> mons;
  auto note = [&](const Polynomial& p) {
    for (const auto& [m, c] : p.terms())
      if (std::find(mons.begin(), mons.end(), m) == mons.end()) mons.push_back(m);
  };
  for (const Polynomial& g : gens) note(g);
  note(target);
  size_t rows = mons.size(), cols = gens.size();
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) A[i][j] = gens[j].coeff(mons[i]);
    A[i][cols] = target.coeff(mons[i]);
  }
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c] / A[r][c];
      for (size_t j = c; j <= cols; ++j) A[i][j] -= f * A[r][j];
    }
    ++r;
  }
  for (size_t i = 0; i < rows; ++i) {
    bool zero_row = true;
    for (size_t j = 0; j < cols; ++j)
      if (A[i][j] != 0) zero_row = false;
    if (zero_row && A[i][cols] != 0) return false;
  }
  return true;
}

// Brute-force ideal membership: target in <gens> iff it is a linear
// combination of {m * g} with monomial multipliers up to total degree D.
// Complete for yes-instances whose witness fits the degree bound.
inline bool brute_force_member(const std::vector<Polynomial>& gens, const Polynomial& target,
                               const std::set<std::string>& vars, int d) {
  std::vector<Polynomial> products;
  for (const Monomial& m : monomials_up_to(vars, d))
    for (const Polynomial& g : gens) products.push_back(Polynomial::term(m, 1) * g);
  return linear_solvable(products, target);
}

inline int check_groebner_nf(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> vars{"x", "y"};
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Polynomial> gens{rand_polynomial(rng, vars, 2, 3),
                                 rand_polynomial(rng, vars, 2, 3)};
    Ideal ideal(gens);
    Polynomial p = rand_polynomial(rng, vars, 3, 4);
    Polynomial q = rand_polynomial(rng, vars, 3, 4);
    Polynomial np = ideal.normal_form(p);
    if (ideal.normal_form(np) != np) ++bad;                          // idempotent
    if (ideal.normal_form(p + q) != np + ideal.normal_form(q)) ++bad;  // linear
    if (!ideal.contains(p - np)) ++bad;  // reduction stays in the ideal
  }
  return bad;
}

inline int check_membership_oracle(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> varlist{"x", "y"};
  std::set<std::string> vars(varlist.begin(), varlist.end());
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Polynomial> gens{rand_polynomial(rng, varlist, 2, 3),
                                 rand_polynomial(rng, varlist, 2, 3)};
    Ideal ideal(gens);
    // planted member: random combination of the generators
    Polynomial member = rand_polynomial(rng, varlist, 1, 2) * gens[0] +
                        rand_polynomial(rng, varlist, 1, 2) * gens[1];
    if (!ideal.contains(member)) ++bad;
    // cross-check a random probe against the bounded brute-force oracle
    Polynomial probe = rand_polynomial(rng, varlist, 2, 3);
    if (brute_force_member(gens, probe, vars, 3) && !ideal.contains(probe)) ++bad;
    if (ideal.contains(probe)) {
      // witness degrees for these sizes fit comfortably under the bound
      if (!brute_force_member(gens, probe, vars, 6)) ++bad;
    }
  }
  return bad;
}

// ---- double description ---------------------------------------------------

inline int check_dd_roundtrip(int probes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dimd(2, 3), rowsd(2, 5), cd(-3, 3), pd(-4, 4);
  int bad = 0;
  int done = 0;
  while (done < probes) {
    Eigen::Index dim = dimd(rng);
    HPolyhedron h;
    h.dim = dim;
    int rows = rowsd(rng);
    for (int i = 0; i < rows; ++i) {
      Vec a = Vec::Zero(dim);
      for (Eigen::Index j = 0; j < dim; ++j) a[j] = cd(rng);
      Rational b(cd(rng));
      if (i == 0 && rowsd(rng) == 2)
        h.eqs.emplace_back(std::move(a), b);
      else
        h.ineqs.emplace_back(std::move(a), b);
    }
    VPolyhedron v = h_to_v(h);
    HPolyhedron h2 = v_to_h(v);
    for (int p = 0; p < 25 && done < probes; ++p, ++done) {
      Vec x(dim);
      for (Eigen::Index j = 0; j < dim; ++j) x[j] = Rational(pd(rng)) / 2;
      bool in_h = member(x, h);
      if (in_h != member(x, v)) ++bad;
      if (in_h != member(x, h2)) ++bad;
    }
  }
  return bad;
}

// ---- DNF ------------------------------------------------------------------

inline bool formula_has_negated_int(const FormulaPtr& f, bool neg) {
  if (std::holds_alternative<Atom>(f->node)) return false;
  if (std::holds_alternative<IntAtom>(f->node)) return neg;
  if (const auto* n = std::get_if<Not>(&f->node))
    return formula_has_negated_int(n->child, !neg);
  if (const auto* n = std::get_if<And>(&f->node))
    return formula_has_negated_int(n->left, neg) || formula_has_negated_int(n->right, neg);
  const auto& o = std::get<Or>(f->node);
  return formula_has_negated_int(o.left, neg) || formula_has_negated_int(o.right, neg);
}

// truth preservation: the DNF is equivalent (or, with !int weakening, implied)
inline int check_dnf_truth(const TransitionFormula& f, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-4, 4), den(1, 2);
  std::vector<Cell> cells = dnf(f, 4096);
  bool weakened = formula_has_negated_int(f.root, false);
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    std::map<std::string, Rational> v;
    for (const std::string& x : f.all_vars()) v[x] = Rational(val(rng)) / den(rng);
    bool truth = eval_formula(f, v);
    bool cell_truth = false;
    for (const Cell& c : cells)
      if (eval_cell(c, v)) cell_truth = true;
    if (truth && !cell_truth) ++bad;
    if (!weakened && cell_truth && !truth) ++bad;
  }
  return bad;
}

// ---- sampling soundness ---------------------------------------------------

// every generator of consequence(F, keep) holds on sampled models of F
inline int check_consequence_sound(const TransitionFormula& f, int samples,
                                   std::uint64_t seed) {
  OracleConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  AlgebraicCone cone = consequence(f, f.all_vars());
  auto models = sample_models(f, cfg);
  if (cone.is_inconsistent()) return static_cast<int>(models.size());
  int bad = 0;
  for (const auto& m : models) {
    for (const Polynomial& z : cone.zeros().generators())
      if (z.eval(m) != 0) ++bad;
    for (const Polynomial& p : cone.positives())
      if (p.eval(m) < 0) ++bad;
  }
  return bad;
}

// PRF witness decreases by >= 1; every lprf generator is bounded/non-increasing
inline int check_certificate_sound(const TransitionFormula& f, const Verdict& v,
                                   int samples, std::uint64_t seed) {
  OracleConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  int bad = 0;
  if (v.certificate.witness) {
    // the witness ranks the zero-stable strengthening (termination-equivalent)
    auto models = sample_models(zero_stable_restrict(f), cfg);
    Polynomial r = *v.certificate.witness;
    Polynomial rp = r.prime();
    for (const auto& m : models) {
      if (r.eval(m) < 0) ++bad;
      if (rp.eval(m) > r.eval(m) - 1) ++bad;
    }
  }
  // each iteration cone ranks the formula as framed by its predecessors
  TransitionFormula framed = f;
  for (const auto& iter : v.certificate.iterations) {
    auto iter_models = sample_models(framed, cfg);
    for (const Polynomial& p : iter.positives) {
      Polynomial pp = p.prime();
      for (const auto& m : iter_models) {
        if (p.eval(m) < 0) ++bad;
        if (pp.eval(m) > p.eval(m)) ++bad;
      }
    }
    framed = conjoin_frame(framed, iter.zeros, iter.positives);
  }
  return bad;
}

// ---- corpus helpers -------------------------------------------------------

inline TransitionFormula load_loop(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_formula(buf.str());
}

inline std::vector<std::string> corpus_files(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".loop") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

// value of a "# key: N" header comment, if present
inline std::optional<int> loop_annotation(const std::string& path, const std::string& key) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find(key + ":");
    if (line.rfind("#", 0) == 0 && pos != std::string::npos)
      return std::stoi(line.substr(pos + key.size() + 1));
  }
  return std::nullopt;
}

}  // namespace testsupport
