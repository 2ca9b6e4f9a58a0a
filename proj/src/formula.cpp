#include "polyrank/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace polyrank {

FormulaPtr make_atom(Polynomial lhs, Rel rel, Polynomial rhs) {
  return std::make_shared<Formula>(Formula{Atom{std::move(lhs), rel, std::move(rhs)}});
}
FormulaPtr make_int(Polynomial arg) {
  return std::make_shared<Formula>(Formula{IntAtom{std::move(arg)}});
}
FormulaPtr make_not(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{Not{std::move(f)}});
}
FormulaPtr make_and(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{And{std::move(a), std::move(b)}});
}
FormulaPtr make_or(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{Or{std::move(a), std::move(b)}});
}

bool ast_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->node.index() != b->node.index()) return false;
  if (const auto* x = std::get_if<Atom>(&a->node)) {
    const auto& y = std::get<Atom>(b->node);
    return x->rel == y.rel && x->lhs == y.lhs && x->rhs == y.rhs;
  }
  if (const auto* x = std::get_if<IntAtom>(&a->node))
    return x->arg == std::get<IntAtom>(b->node).arg;
  if (const auto* x = std::get_if<Not>(&a->node))
    return ast_equal(x->child, std::get<Not>(b->node).child);
  if (const auto* x = std::get_if<And>(&a->node)) {
    const auto& y = std::get<And>(b->node);
    return ast_equal(x->left, y.left) && ast_equal(x->right, y.right);
  }
  const auto& x = std::get<Or>(a->node);
  const auto& y = std::get<Or>(b->node);
  return ast_equal(x.left, y.left) && ast_equal(x.right, y.right);
}

std::set<std::string> TransitionFormula::all_vars() const {
  std::set<std::string> s = vars;
  for (const std::string& x : vars) s.insert(primed(x));
  return s;
}

int Cell::max_degree() const {
  int d = 1;
  for (const auto* group : {&eqs, &nonneg, &strict})
    for (const Polynomial& p : *group) d = std::max(d, p.total_degree());
  return d;
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  char peek2() const { return pos + 1 < text.size() ? text[pos + 1] : '\0'; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      for (size_t i = 0; i < tok.size(); ++i) advance();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!eat(tok)) fail("expected '" + tok + "'");
  }

  bool at_ident() {
    skip_ws();
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skip_ws();
    if (!at_ident()) fail("expected identifier");
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      advance();
    return text.substr(start, pos - start);
  }

  std::set<std::string> declared;

  Polynomial var_ref(const std::string& name) {
    std::string full = name;
    if (peek() == '\'') {
      advance();
      if (peek() == '\'') fail("double prime on variable " + name);
      full = primed(name);
    }
    if (!declared.count(name)) fail("undeclared variable " + name);
    return Polynomial::variable(full);
  }

  Polynomial number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance();
    if (pos == start) fail("expected number");
    Integer num(text.substr(start, pos - start));
    skip_ws();
    if (peek() == '/') {
      size_t save = pos;
      int sl = line, sc = col;
      advance();
      skip_ws();
      size_t ds = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance();
      if (pos == ds) {
        pos = save;
        line = sl;
        col = sc;
        return Polynomial{Rational(num)};
      }
      Integer den(text.substr(ds, pos - ds));
      if (den == 0) fail("zero denominator");
      return Polynomial{Rational(num, den)};
    }
    return Polynomial{Rational(num)};
  }

  Polynomial term_expr() {
    skip_ws();
    Polynomial p = eat("-") ? -term_product() : term_product();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        advance();
        p += term_product();
      } else if (peek() == '-') {
        advance();
        p -= term_product();
      } else {
        return p;
      }
    }
  }

  Polynomial term_product() {
    Polynomial p = term_power();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        advance();
        p = p * term_power();
      } else {
        return p;
      }
    }
  }

  Polynomial term_power() {
    Polynomial base = term_factor();
    skip_ws();
    if (peek() == '^') {
      advance();
      skip_ws();
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance();
      if (pos == start) fail("expected exponent");
      int e = std::stoi(text.substr(start, pos - start));
      Polynomial r{1};
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial term_factor() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      advance();
      Polynomial p = term_expr();
      expect(")");
      return p;
    }
    if (c == '-') {
      advance();
      return -term_power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (at_ident()) return var_ref(ident());
    fail("expected term");
  }

  FormulaPtr formula() {
    FormulaPtr f = conjunction();
    while (eat("||")) f = make_or(f, conjunction());
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (eat("&&")) f = make_and(f, unary());
    return f;
  }

  FormulaPtr unary() {
    skip_ws();
    if (eat("!")) return make_not(unary());
    if (peek() == '(') {
      // parenthesized formula or parenthesized term; try formula first
      size_t save = pos;
      int sl = line, sc = col;
      advance();
      try {
        FormulaPtr f = formula();
        expect(")");
        return f;
      } catch (const ParseError&) {
        pos = save;
        line = sl;
        col = sc;
      }
    }
    return atom();
  }

  FormulaPtr atom() {
    skip_ws();
    if (at_ident()) {
      size_t save = pos;
      int sl = line, sc = col;
      std::string id = ident();
      skip_ws();
      if (id == "int" && peek() == '(') {
        advance();
        Polynomial arg = term_expr();
        expect(")");
        return make_int(std::move(arg));
      }
      pos = save;
      line = sl;
      col = sc;
    }
    Polynomial lhs = term_expr();
    Rel rel;
    if (eat("<="))
      rel = Rel::Le;
    else if (eat(">="))
      rel = Rel::Ge;
    else if (eat("=="))
      rel = Rel::Eq;
    else if (eat("!="))
      rel = Rel::Ne;
    else if (eat("<"))
      rel = Rel::Lt;
    else if (eat(">"))
      rel = Rel::Gt;
    else
      fail("expected relation");
    Polynomial rhs = term_expr();
    return make_atom(std::move(lhs), rel, std::move(rhs));
  }
};

}  // namespace

TransitionFormula parse_formula(const std::string& text) {
  Parser p(text);
  p.expect("vars");
  std::set<std::string> vars;
  while (p.at_ident()) {
    size_t save = p.pos;
    int sl = p.line, sc = p.col;
    std::string v = p.ident();
    if (v == "transition") {
      p.pos = save;
      p.line = sl;
      p.col = sc;
      break;
    }
    if (v == "int") p.fail("'int' is reserved");
    vars.insert(v);
  }
  p.expect(";");
  p.expect("transition");
  p.expect(":");
  p.declared = vars;
  FormulaPtr root = p.formula();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return TransitionFormula{std::move(vars), std::move(root)};
}

FormulaPtr parse_formula_body(const std::string& text, const std::set<std::string>& vars) {
  Parser p(text);
  p.declared = vars;
  FormulaPtr root = p.formula();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return root;
}

namespace {

std::string rel_str(Rel r) {
  switch (r) {
    case Rel::Le: return "<=";
    case Rel::Lt: return "<";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
    case Rel::Eq: return "==";
    case Rel::Ne: return "!=";
  }
  return "?";
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  if (const auto* a = std::get_if<Atom>(&f->node))
    return a->lhs.str() + " " + rel_str(a->rel) + " " + a->rhs.str();
  if (const auto* a = std::get_if<IntAtom>(&f->node)) return "int(" + a->arg.str() + ")";
  if (const auto* n = std::get_if<Not>(&f->node)) return "!(" + print_formula(n->child) + ")";
  if (const auto* n = std::get_if<And>(&f->node))
    return "(" + print_formula(n->left) + " && " + print_formula(n->right) + ")";
  const auto& n = std::get<Or>(f->node);
  return "(" + print_formula(n.left) + " || " + print_formula(n.right) + ")";
}

std::string print_file(const TransitionFormula& f) {
  std::string s = "vars";
  for (const std::string& v : f.vars) s += " " + v;
  s += ";\ntransition: " + print_formula(f.root) + "\n";
  return s;
}

namespace {

void merge_cells(std::vector<Cell>& acc, const std::vector<Cell>& more, int max_cells) {
  std::vector<Cell> out;
  for (const Cell& a : acc) {
    for (const Cell& b : more) {
      Cell c = a;
      c.eqs.insert(c.eqs.end(), b.eqs.begin(), b.eqs.end());
      c.nonneg.insert(c.nonneg.end(), b.nonneg.begin(), b.nonneg.end());
      c.strict.insert(c.strict.end(), b.strict.begin(), b.strict.end());
      c.ints.insert(c.ints.end(), b.ints.begin(), b.ints.end());
      out.push_back(std::move(c));
      if (static_cast<int>(out.size()) > max_cells)
        throw ResourceLimitError("DNF cell limit exceeded");
    }
  }
  acc = std::move(out);
}

// cells of f (negated if `neg`)
std::vector<Cell> to_cells(const FormulaPtr& f, bool neg, int max_cells) {
  if (const auto* a = std::get_if<Atom>(&f->node)) {
    Polynomial d = a->rhs - a->lhs;  // atom is lhs REL rhs
    Rel rel = a->rel;
    if (neg) {
      switch (rel) {
        case Rel::Le: rel = Rel::Gt; break;
        case Rel::Lt: rel = Rel::Ge; break;
        case Rel::Ge: rel = Rel::Lt; break;
        case Rel::Gt: rel = Rel::Le; break;
        case Rel::Eq: rel = Rel::Ne; break;
        case Rel::Ne: rel = Rel::Eq; break;
      }
    }
    Cell c;
    switch (rel) {
      case Rel::Le: c.nonneg.push_back(d); return {c};          // rhs - lhs >= 0
      case Rel::Lt: c.strict.push_back(d); return {c};          // rhs - lhs > 0
      case Rel::Ge: c.nonneg.push_back(-d); return {c};
      case Rel::Gt: c.strict.push_back(-d); return {c};
      case Rel::Eq: c.eqs.push_back(d); return {c};
      case Rel::Ne: {
        Cell c2;
        c.strict.push_back(d);    // lhs < rhs
        c2.strict.push_back(-d);  // lhs > rhs
        return {c, c2};
      }
    }
    return {c};
  }
  if (const auto* a = std::get_if<IntAtom>(&f->node)) {
    Cell c;
    if (!neg) c.ints.push_back(a->arg);  // !int(t) weakened to true
    return {c};
  }
  if (const auto* n = std::get_if<Not>(&f->node)) return to_cells(n->child, !neg, max_cells);
  bool conj;
  FormulaPtr left, right;
  if (const auto* n = std::get_if<And>(&f->node)) {
    conj = !neg;
    left = n->left;
    right = n->right;
  } else {
    const auto& o = std::get<Or>(f->node);
    conj = neg;
    left = o.left;
    right = o.right;
  }
  std::vector<Cell> ls = to_cells(left, neg, max_cells);
  std::vector<Cell> rs = to_cells(right, neg, max_cells);
  if (conj) {
    merge_cells(ls, rs, max_cells);
    return ls;
  }
  ls.insert(ls.end(), rs.begin(), rs.end());
  if (static_cast<int>(ls.size()) > max_cells)
    throw ResourceLimitError("DNF cell limit exceeded");
  return ls;
}

}  // namespace

std::vector<Cell> dnf(const TransitionFormula& f, int max_cells) {
  return to_cells(f.root, false, max_cells);
}

bool eval_formula(const FormulaPtr& f, const std::map<std::string, Rational>& v) {
  if (const auto* a = std::get_if<Atom>(&f->node)) {
    Rational l = a->lhs.eval(v), r = a->rhs.eval(v);
    switch (a->rel) {
      case Rel::Le: return l <= r;
      case Rel::Lt: return l < r;
      case Rel::Ge: return l >= r;
      case Rel::Gt: return l > r;
      case Rel::Eq: return l == r;
      case Rel::Ne: return l != r;
    }
  }
  if (const auto* a = std::get_if<IntAtom>(&f->node)) return is_integer(a->arg.eval(v));
  if (const auto* n = std::get_if<Not>(&f->node)) return !eval_formula(n->child, v);
  if (const auto* n = std::get_if<And>(&f->node))
    return eval_formula(n->left, v) && eval_formula(n->right, v);
  const auto& n = std::get<Or>(f->node);
  return eval_formula(n.left, v) || eval_formula(n.right, v);
}

bool eval_formula(const TransitionFormula& f, const std::map<std::string, Rational>& v) {
  return eval_formula(f.root, v);
}

bool eval_cell(const Cell& c, const std::map<std::string, Rational>& v) {
  for (const Polynomial& p : c.eqs)
    if (p.eval(v) != 0) return false;
  for (const Polynomial& p : c.nonneg)
    if (p.eval(v) < 0) return false;
  for (const Polynomial& p : c.strict)
    if (p.eval(v) <= 0) return false;
  for (const Polynomial& p : c.ints)
    if (!is_integer(p.eval(v))) return false;
  return true;
}

TransitionFormula conjoin_primed_zero(const TransitionFormula& f,
                                      const std::vector<Polynomial>& zeros) {
  FormulaPtr root = f.root;
  for (const Polynomial& z : zeros)
    root = make_and(root, make_atom(z.prime(), Rel::Eq, Polynomial{0}));
  return TransitionFormula{f.vars, root};
}

TransitionFormula conjoin_frame(const TransitionFormula& f,
                                const std::vector<Polynomial>& zeros,
                                const std::vector<Polynomial>& positives) {
  FormulaPtr root = f.root;
  for (const Polynomial& z : zeros) root = make_and(root, make_atom(z.prime(), Rel::Eq, z));
  for (const Polynomial& p : positives)
    root = make_and(root, make_atom(p.prime(), Rel::Eq, p));
  return TransitionFormula{f.vars, root};
}

namespace {

int node_max_degree(const FormulaPtr& f) {
  if (const auto* a = std::get_if<Atom>(&f->node))
    return std::max(a->lhs.total_degree(), a->rhs.total_degree());
  if (const auto* a = std::get_if<IntAtom>(&f->node)) return a->arg.total_degree();
  if (const auto* n = std::get_if<Not>(&f->node)) return node_max_degree(n->child);
  if (const auto* n = std::get_if<And>(&f->node))
    return std::max(node_max_degree(n->left), node_max_degree(n->right));
  const auto& n = std::get<Or>(f->node);
  return std::max(node_max_degree(n.left), node_max_degree(n.right));
}

}  // namespace

int formula_max_degree(const TransitionFormula& f) {
  return std::max(1, node_max_degree(f.root));
}

}  // namespace polyrank
