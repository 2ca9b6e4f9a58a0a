#include "polyrank/oracle.hpp"

#include <algorithm>
#include <random>

namespace polyrank {

namespace {

Rational draw(std::mt19937_64& rng, const OracleConfig& cfg) {
  std::uniform_int_distribution<long> d(cfg.box_lo, cfg.box_hi);
  if (cfg.integer) return Rational(d(rng));
  std::uniform_int_distribution<long> den(1, 4);
  return Rational(d(rng)) / den(rng);
}

bool in_box(const Rational& v, const OracleConfig& cfg) {
  return v >= cfg.box_lo && v <= cfg.box_hi;
}

// x' = (solved expression over X), from a linear equality c*x' + q(X) = 0
struct Update {
  std::string var;       // primed name
  Polynomial rhs;        // over X
};

// Update form: every primed variable of the cell is pinned by some equality
// that is linear in that variable and otherwise primed-free.
std::optional<std::vector<Update>> update_form(const Cell& cell,
                                               const std::set<std::string>& vars) {
  std::set<std::string> primed_vars;
  for (const auto* group : {&cell.eqs, &cell.nonneg, &cell.strict})
    for (const Polynomial& p : *group)
      for (const std::string& v : p.support())
        if (is_primed(v)) primed_vars.insert(v);
  for (const std::string& x : vars) primed_vars.insert(primed(x));

  std::vector<Update> updates;
  for (const std::string& y : primed_vars) {
    bool found = false;
    for (const Polynomial& p : cell.eqs) {
      Rational c = p.linear_coeff(y);
      if (c == 0) continue;
      Polynomial rest = p - Polynomial::variable(y) * c;
      bool clean = true;
      for (const std::string& v : rest.support())
        if (is_primed(v)) clean = false;
      if (!clean) continue;
      updates.push_back({y, rest * (Rational(-1) / c)});
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  return updates;
}

std::optional<Valuation> forward_step(const Cell& cell, const std::vector<Update>& updates,
                                      const Valuation& state, const OracleConfig& cfg) {
  Valuation full = state;
  for (const Update& u : updates) {
    Rational v = u.rhs.eval(state);
    if (!in_box(v, cfg)) return std::nullopt;
    full[u.var] = v;
  }
  if (!eval_cell(cell, full)) return std::nullopt;
  return full;
}

}  // namespace

std::vector<Valuation> sample_models(const TransitionFormula& f, const OracleConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<Valuation> out;

  std::vector<Cell> cells;
  try {
    cells = dnf(f, 1 << 12);
  } catch (const ResourceLimitError&) {
    cells.clear();
  }

  std::vector<std::pair<const Cell*, std::vector<Update>>> forward;
  bool all_forward = !cells.empty();
  for (const Cell& c : cells) {
    auto u = update_form(c, f.vars);
    if (u)
      forward.emplace_back(&c, std::move(*u));
    else
      all_forward = false;
  }

  std::set<std::string> all = f.all_vars();
  long budget = static_cast<long>(cfg.samples) * 40;
  while (static_cast<long>(out.size()) < cfg.samples && budget-- > 0) {
    if (all_forward) {
      Valuation state;
      for (const std::string& x : f.vars) state[x] = draw(rng, cfg);
      const auto& [cell, updates] =
          forward[std::uniform_int_distribution<size_t>(0, forward.size() - 1)(rng)];
      if (auto full = forward_step(*cell, updates, state, cfg)) out.push_back(*full);
    } else {
      Valuation v;
      for (const std::string& x : all) v[x] = draw(rng, cfg);
      if (eval_formula(f, v)) out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Valuation> simulate(const TransitionFormula& f, const Valuation& v0,
                                int max_steps, const OracleConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<Cell> cells;
  try {
    cells = dnf(f, 1 << 12);
  } catch (const ResourceLimitError&) {
    return {v0};
  }
  std::vector<std::pair<const Cell*, std::optional<std::vector<Update>>>> prepared;
  for (const Cell& c : cells) prepared.emplace_back(&c, update_form(c, f.vars));

  std::vector<std::string> primed_names;
  for (const std::string& x : f.vars) primed_names.push_back(primed(x));

  std::vector<Valuation> trace{v0};
  Valuation state = v0;
  for (int step = 0; step < max_steps; ++step) {
    std::optional<Valuation> next;
    for (const auto& [cell, updates] : prepared) {
      if (updates) {
        if (auto full = forward_step(*cell, *updates, state, cfg)) {
          next = *full;
          break;
        }
      } else {
        for (int trial = 0; trial < 200 && !next; ++trial) {
          Valuation full = state;
          for (const std::string& y : primed_names) full[y] = draw(rng, cfg);
          if (eval_cell(*cell, full)) next = full;
        }
        if (next) break;
      }
    }
    if (!next) break;
    Valuation succ;
    for (const std::string& x : f.vars) succ[x] = (*next)[primed(x)];
    trace.push_back(succ);
    state = std::move(succ);
  }
  return trace;
}

namespace {

// Phase-1 simplex with Bland's rule: some z >= 0 with E z = h, exact rationals.
std::optional<std::vector<Rational>> feasible_point(std::vector<std::vector<Rational>> E,
                                                    std::vector<Rational> h) {
  size_t m = E.size();
  size_t n = m == 0 ? 0 : E[0].size();
  if (m == 0) return std::vector<Rational>(n, Rational(0));

  for (size_t i = 0; i < m; ++i)
    if (h[i] < 0) {
      for (Rational& c : E[i]) c = -c;
      h[i] = -h[i];
    }

  // columns: n structural + m artificial; basis starts as the artificials
  size_t cols = n + m;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> rhs = h;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = E[i][j];
    T[i][n + i] = 1;
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  // reduced costs for minimizing the artificial sum
  std::vector<Rational> obj(cols, Rational(0));
  Rational objval(0);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) obj[j] += T[i][j];
    objval += rhs[i];
  }

  for (;;) {
    size_t enter = cols;
    for (size_t j = 0; j < cols; ++j)
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    size_t leave = m;
    Rational best(0);
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / T[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave]))
        leave = i, best = ratio;
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase 1

    Rational piv = T[leave][enter];
    for (Rational& c : T[leave]) c /= piv;
    rhs[leave] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (size_t j = 0; j < cols; ++j) obj[j] -= f * T[leave][j];
      objval -= f * rhs[leave];
    }
    basis[leave] = enter;
  }

  if (objval != 0) return std::nullopt;
  std::vector<Rational> z(n, Rational(0));
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) z[basis[i]] = rhs[i];
  return z;
}

}  // namespace

std::optional<Polynomial> linear_rf_oracle(const Cell& cell) {
  for (const auto* group : {&cell.eqs, &cell.nonneg, &cell.strict})
    for (const Polynomial& p : *group)
      if (!p.is_linear()) return std::nullopt;

  std::set<std::string> xs;
  for (const auto* group : {&cell.eqs, &cell.nonneg, &cell.strict})
    for (const Polynomial& p : *group)
      for (const std::string& v : p.support()) xs.insert(unprimed(v));
  std::vector<std::string> vars(xs.begin(), xs.end());
  size_t d = vars.size();

  // rows a.x + a'.x' <= b
  struct Row {
    std::vector<Rational> a, ap;
    Rational b;
  };
  std::vector<Row> rows;
  auto push = [&](const Polynomial& p) {  // p <= 0
    Row r{std::vector<Rational>(d, Rational(0)), std::vector<Rational>(d, Rational(0)),
          -p.constant_term()};
    for (size_t j = 0; j < d; ++j) {
      r.a[j] = p.linear_coeff(vars[j]);
      r.ap[j] = p.linear_coeff(primed(vars[j]));
    }
    rows.push_back(std::move(r));
  };
  for (const Polynomial& p : cell.eqs) {
    push(p);
    push(-p);
  }
  for (const Polynomial& p : cell.nonneg) push(-p);
  for (const Polynomial& p : cell.strict) push(-p);  // relaxed to >=; still sound

  size_t m = rows.size();
  // unknowns: lambda (m), mu (m), slack (1), all >= 0
  size_t nz = 2 * m + 1;
  std::vector<std::vector<Rational>> E;
  std::vector<Rational> h;
  auto fresh = [&]() {
    E.emplace_back(nz, Rational(0));
    h.emplace_back(0);
    return &E.back();
  };
  for (size_t j = 0; j < d; ++j) {  // lambda^T A' = 0
    auto* row = fresh();
    for (size_t i = 0; i < m; ++i) (*row)[i] = rows[i].ap[j];
  }
  for (size_t j = 0; j < d; ++j) {  // mu^T A = lambda^T A
    auto* row = fresh();
    for (size_t i = 0; i < m; ++i) {
      (*row)[i] = -rows[i].a[j];
      (*row)[m + i] = rows[i].a[j];
    }
  }
  for (size_t j = 0; j < d; ++j) {  // mu^T A' = -lambda^T A
    auto* row = fresh();
    for (size_t i = 0; i < m; ++i) {
      (*row)[i] = rows[i].a[j];
      (*row)[m + i] = rows[i].ap[j];
    }
  }
  {  // mu^T b + slack = -1
    auto* row = fresh();
    for (size_t i = 0; i < m; ++i) (*row)[m + i] = rows[i].b;
    (*row)[2 * m] = 1;
    h.back() = Rational(-1);
  }

  auto z = feasible_point(std::move(E), std::move(h));
  if (!z) return std::nullopt;

  Polynomial r;
  Rational dconst(0);
  for (size_t j = 0; j < d; ++j) {
    Rational c(0);
    for (size_t i = 0; i < m; ++i) c -= (*z)[i] * rows[i].a[j];
    if (c != 0) r += Polynomial::variable(vars[j]) * c;
  }
  for (size_t i = 0; i < m; ++i) dconst += (*z)[i] * rows[i].b;
  r += Polynomial(dconst);
  return r;
}

}  // namespace polyrank
