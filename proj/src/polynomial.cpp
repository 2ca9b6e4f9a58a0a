#include "polyrank/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace polyrank {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_[Monomial::one()] = c;
}

Polynomial Polynomial::variable(const std::string& name) {
  return term(Monomial::var(name), 1);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<std::string> Polynomial::support() const {
  std::set<std::string> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) s.insert(v);
  return s;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::linear_coeff(const std::string& var) const {
  return coeff(Monomial::var(var));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r += term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

bool is_primed(const std::string& name) { return !name.empty() && name.back() == '\''; }

std::string primed(const std::string& name) { return name + "'"; }

std::string unprimed(const std::string& name) {
  return is_primed(name) ? name.substr(0, name.size() - 1) : name;
}

Polynomial Polynomial::prime() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial pm;
    for (const auto& [v, e] : m.exponents()) {
      if (is_primed(v)) throw std::invalid_argument("cannot prime " + v + " twice");
      pm = pm * Monomial::var(primed(v), e);
    }
    r.terms_[pm] = c;
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& sigma) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Polynomial t{c};
    for (const auto& [v, e] : m.exponents()) {
      auto it = sigma.find(v);
      Polynomial img = it != sigma.end() ? it->second : Polynomial::variable(v);
      for (int i = 0; i < e; ++i) t = t * img;
    }
    r += t;
  }
  return r;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& v) const {
  Rational r = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [var, e] : m.exponents()) {
      auto it = v.find(var);
      if (it == v.end()) throw std::invalid_argument("unbound variable " + var);
      for (int i = 0; i < e; ++i) t *= it->second;
    }
    r += t;
  }
  return r;
}

std::pair<Monomial, Rational> Polynomial::leading(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return grevlex_less(b.first, a.first); });
  std::string s;
  bool first = true;
  for (const auto& [m, c] : ts) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (m.is_one()) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + "*";
      s += m.str();
    }
    first = false;
  }
  return s;
}

namespace {

// minimal recursive-descent parser for polynomial expressions
struct PolyParser {
  const std::string& text;
  size_t pos = 0;

  explicit PolyParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("polynomial parse error at offset " + std::to_string(pos) + ": " + msg);
  }

  Polynomial parse_expr() {
    Polynomial p = eat('-') ? -parse_term() : parse_term();
    for (;;) {
      if (eat('+'))
        p += parse_term();
      else if (eat('-'))
        p -= parse_term();
      else
        return p;
    }
  }

  Polynomial parse_term() {
    Polynomial p = parse_power();
    for (;;) {
      skip_ws();
      if (eat('*'))
        p = p * parse_power();
      else
        return p;
    }
  }

  Polynomial parse_power() {
    Polynomial base = parse_factor();
    if (eat('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("expected exponent");
      int e = std::stoi(text.substr(start, pos - start));
      Polynomial r{1};
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial parse_factor() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial p = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos;
      return -parse_power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_var();
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial parse_number() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    Integer num(text.substr(start, pos - start));
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      size_t save = pos;
      ++pos;
      skip_ws();
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) {
        pos = save;
        return Polynomial{Rational(num)};
      }
      Integer den(text.substr(dstart, pos - dstart));
      if (den == 0) fail("zero denominator");
      return Polynomial{Rational(num, den)};
    }
    return Polynomial{Rational(num)};
  }

  Polynomial parse_var() {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string name = text.substr(start, pos - start);
    if (pos < text.size() && text[pos] == '\'') {
      ++pos;
      if (pos < text.size() && text[pos] == '\'') fail("double prime");
      name += "'";
    }
    return Polynomial::variable(name);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  PolyParser p(text);
  Polynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

std::vector<Monomial> monomials_up_to(const std::set<std::string>& vars, int d) {
  std::vector<std::string> vs(vars.begin(), vars.end());
  std::vector<Monomial> out;
  Monomial cur;
  // depth-first over exponent vectors
  auto rec = [&](auto&& self, size_t i, int remaining, const Monomial& m) -> void {
    if (i == vs.size()) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= remaining; ++e)
      self(self, i + 1, remaining - e, e == 0 ? m : m * Monomial::var(vs[i], e));
  };
  rec(rec, 0, d, cur);
  std::sort(out.begin(), out.end(), grevlex_less);
  return out;
}

}  // namespace polyrank
