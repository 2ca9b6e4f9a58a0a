#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "polyrank/polynomial.hpp"

namespace polyrank {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Rel { Le, Lt, Ge, Gt, Eq, Ne };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Atom {
  Polynomial lhs;
  Rel rel;
  Polynomial rhs;
};
struct IntAtom {
  Polynomial arg;
};
struct Not {
  FormulaPtr child;
};
struct And {
  FormulaPtr left, right;
};
struct Or {
  FormulaPtr left, right;
};

struct Formula {
  std::variant<Atom, IntAtom, Not, And, Or> node;
};

FormulaPtr make_atom(Polynomial lhs, Rel rel, Polynomial rhs);
FormulaPtr make_int(Polynomial arg);
FormulaPtr make_not(FormulaPtr f);
FormulaPtr make_and(FormulaPtr a, FormulaPtr b);
FormulaPtr make_or(FormulaPtr a, FormulaPtr b);
bool ast_equal(const FormulaPtr& a, const FormulaPtr& b);

// Boolean combination of polynomial atoms over X and X'.
struct TransitionFormula {
  std::set<std::string> vars;  // unprimed variable set X
  FormulaPtr root;

  std::set<std::string> all_vars() const;  // X plus primed copies
};

// Conjunctive cell of a DNF: equalities (= 0), nonstrict (>= 0), strict (> 0),
// and Int atoms (recorded, no constraint contributed).
struct Cell {
  std::vector<Polynomial> eqs;
  std::vector<Polynomial> nonneg;
  std::vector<Polynomial> strict;
  std::vector<Polynomial> ints;

  int max_degree() const;
};

// Parses the `vars ... ; transition: ...` file format.
TransitionFormula parse_formula(const std::string& text);
// Parses a bare formula body against a fixed variable set.
FormulaPtr parse_formula_body(const std::string& text, const std::set<std::string>& vars);

std::string print_formula(const FormulaPtr& f);
std::string print_file(const TransitionFormula& f);

// Disjunctive normal form under the total-order negation rewrites; !Int atoms
// are dropped (sound weakening).  Throws ResourceLimitError past max_cells.
std::vector<Cell> dnf(const TransitionFormula& f, int max_cells = 64);

bool eval_formula(const FormulaPtr& f, const std::map<std::string, Rational>& v);
bool eval_formula(const TransitionFormula& f, const std::map<std::string, Rational>& v);
bool eval_cell(const Cell& c, const std::map<std::string, Rational>& v);

TransitionFormula conjoin_primed_zero(const TransitionFormula& f,
                                      const std::vector<Polynomial>& zeros);
TransitionFormula conjoin_frame(const TransitionFormula& f,
                                const std::vector<Polynomial>& zeros,
                                const std::vector<Polynomial>& positives);

int formula_max_degree(const TransitionFormula& f);

}  // namespace polyrank
