#include "polyrank/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyrank {

VPolyhedron VPolyhedron::empty(Eigen::Index dim) {
  VPolyhedron p;
  p.dim = dim;
  return p;
}

VPolyhedron VPolyhedron::point(const Vec& v) {
  VPolyhedron p;
  p.dim = v.size();
  p.vertices.push_back(v);
  return p;
}

VPolyhedron VPolyhedron::cone(Eigen::Index dim, std::vector<Vec> rays,
                              std::vector<Vec> lines) {
  VPolyhedron p;
  p.dim = dim;
  p.rays = std::move(rays);
  p.lines = std::move(lines);
  p.vertices.push_back(Vec::Zero(dim));
  return p;
}

VPolyhedron VPolyhedron::hull(Eigen::Index dim, std::vector<Vec> vertices,
                              std::vector<Vec> rays, std::vector<Vec> lines) {
  VPolyhedron p;
  p.dim = dim;
  p.vertices = std::move(vertices);
  p.rays = std::move(rays);
  p.lines = std::move(lines);
  return p;
}

HPolyhedron HPolyhedron::infeasible(Eigen::Index dim) {
  HPolyhedron h;
  h.dim = dim;
  h.ineqs.emplace_back(Vec::Zero(dim), Rational(1));
  return h;
}

Vec normalize_ray(Vec v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      Rational s = abs(v[i]);
      for (Eigen::Index j = i; j < v.size(); ++j) v[j] /= s;
      break;
    }
  }
  return v;
}

namespace {

Vec normalize_line(Vec v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      Rational s = v[i];
      for (Eigen::Index j = i; j < v.size(); ++j) v[j] /= s;
      break;
    }
  }
  return v;
}

struct Ray {
  Vec v;
  std::vector<bool> tight;  // indexed by processed constraint
};

// true iff the common tight set of a and b is contained in no third ray's
// tight set (Fukuda-Prodon combinatorial adjacency)
bool adjacent(const std::vector<Ray>& rays, size_t ia, size_t ib) {
  const auto& ta = rays[ia].tight;
  const auto& tb = rays[ib].tight;
  for (size_t k = 0; k < rays.size(); ++k) {
    if (k == ia || k == ib) continue;
    const auto& tk = rays[k].tight;
    bool contains = true;
    for (size_t c = 0; c < ta.size(); ++c) {
      if (ta[c] && tb[c] && !tk[c]) {
        contains = false;
        break;
      }
    }
    if (contains) return false;
  }
  return true;
}

}  // namespace

GeneratorSet cone_generators(Eigen::Index dim, const std::vector<Vec>& eqs,
                             const std::vector<Vec>& ineqs) {
  std::vector<Vec> lines;
  lines.reserve(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Vec e = Vec::Zero(dim);
    e[i] = 1;
    lines.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  std::vector<std::pair<Vec, bool>> constraints;  // (row, is_equality)
  for (const Vec& e : eqs) constraints.emplace_back(e, true);
  for (const Vec& c : ineqs) constraints.emplace_back(c, false);

  size_t processed = 0;
  for (const auto& [a, is_eq] : constraints) {
    // a line off the hyperplane absorbs the constraint
    auto lit = std::find_if(lines.begin(), lines.end(),
                            [&](const Vec& l) { return a.dot(l) != 0; });
    if (lit != lines.end()) {
      Vec pivot = *lit;
      lines.erase(lit);
      Rational pa = a.dot(pivot);
      for (Vec& l : lines) {
        Rational la = a.dot(l);
        if (la != 0) l -= pivot * (la / pa);
      }
      for (Ray& r : rays) {
        Rational ra = a.dot(r.v);
        if (ra != 0) r.v -= pivot * (ra / pa);
        r.tight.push_back(true);
      }
      if (!is_eq) {
        if (pa < 0) pivot = -pivot;
        Ray nr;
        nr.v = std::move(pivot);
        nr.tight.assign(processed + 1, true);
        nr.tight[processed] = false;
        rays.push_back(std::move(nr));
      }
      ++processed;
      continue;
    }

    std::vector<size_t> pos, zero, neg;
    for (size_t i = 0; i < rays.size(); ++i) {
      Rational s = a.dot(rays[i].v);
      if (s > 0)
        pos.push_back(i);
      else if (s < 0)
        neg.push_back(i);
      else
        zero.push_back(i);
    }

    if (neg.empty() && (is_eq ? pos.empty() : true)) {
      // constraint already satisfied by every ray
      for (size_t i = 0; i < rays.size(); ++i)
        rays[i].tight.push_back(a.dot(rays[i].v) == 0);
      ++processed;
      continue;
    }

    std::vector<Ray> next;
    for (size_t i : zero) {
      Ray r = rays[i];
      r.tight.push_back(true);
      next.push_back(std::move(r));
    }
    if (!is_eq) {
      for (size_t i : pos) {
        Ray r = rays[i];
        r.tight.push_back(false);
        next.push_back(std::move(r));
      }
    }
    for (size_t ip : pos) {
      for (size_t in : neg) {
        if (!adjacent(rays, ip, in)) continue;
        Ray combo;
        Rational sp = a.dot(rays[ip].v);
        Rational sn = a.dot(rays[in].v);
        combo.v = normalize_ray(rays[in].v * sp - rays[ip].v * sn);
        combo.tight.resize(processed + 1);
        for (size_t c = 0; c < processed; ++c)
          combo.tight[c] = rays[ip].tight[c] && rays[in].tight[c];
        combo.tight[processed] = true;
        next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
    ++processed;
  }

  GeneratorSet out;
  for (Vec& l : lines) out.lines.push_back(normalize_line(std::move(l)));
  for (Ray& r : rays) out.rays.push_back(normalize_ray(std::move(r.v)));
  // dedupe normalized generators
  auto dedupe = [](std::vector<Vec>& vs) {
    std::sort(vs.begin(), vs.end(), [](const Vec& x, const Vec& y) {
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return x[i] < y[i];
      }
      return false;
    });
    vs.erase(std::unique(vs.begin(), vs.end(),
                         [](const Vec& x, const Vec& y) { return x == y; }),
             vs.end());
  };
  dedupe(out.lines);
  dedupe(out.rays);
  return out;
}

VPolyhedron h_to_v(const HPolyhedron& p) {
  // homogenize: coordinate 0 is the scaling variable x0 >= 0
  Eigen::Index d = p.dim;
  std::vector<Vec> eqs, ineqs;
  auto lift = [&](const std::pair<Vec, Rational>& row) {
    Vec v(d + 1);
    v[0] = -row.second;
    v.tail(d) = row.first;
    return v;
  };
  for (const auto& r : p.eqs) eqs.push_back(lift(r));
  for (const auto& r : p.ineqs) ineqs.push_back(lift(r));
  Vec x0 = Vec::Zero(d + 1);
  x0[0] = 1;
  ineqs.push_back(std::move(x0));

  GeneratorSet gen = cone_generators(d + 1, eqs, ineqs);

  VPolyhedron out;
  out.dim = d;
  for (const Vec& l : gen.lines) {
    // x0 >= 0 forces lines onto x0 = 0
    out.lines.push_back(normalize_line(l.tail(d)));
  }
  for (const Vec& r : gen.rays) {
    if (r[0] > 0) {
      out.vertices.push_back(r.tail(d) / r[0]);
    } else {
      Vec dir = normalize_ray(r.tail(d));
      bool zero = true;
      for (Eigen::Index i = 0; i < d; ++i)
        if (dir[i] != 0) zero = false;
      if (!zero) out.rays.push_back(std::move(dir));
    }
  }
  if (out.vertices.empty()) return VPolyhedron::empty(d);
  return out;
}

HPolyhedron v_to_h(const VPolyhedron& p) {
  if (p.is_empty()) return HPolyhedron::infeasible(p.dim);
  // dual cone over (a, b): a.v - b >= 0, a.r >= 0, a.l = 0
  Eigen::Index d = p.dim;
  std::vector<Vec> eqs, ineqs;
  for (const Vec& v : p.vertices) {
    Vec row(d + 1);
    row.head(d) = v;
    row[d] = -1;
    ineqs.push_back(std::move(row));
  }
  for (const Vec& r : p.rays) {
    Vec row = Vec::Zero(d + 1);
    row.head(d) = r;
    ineqs.push_back(std::move(row));
  }
  for (const Vec& l : p.lines) {
    Vec row = Vec::Zero(d + 1);
    row.head(d) = l;
    eqs.push_back(std::move(row));
  }
  GeneratorSet gen = cone_generators(d + 1, eqs, ineqs);

  HPolyhedron out;
  out.dim = d;
  auto nontrivial = [&](const Vec& g) {
    for (Eigen::Index i = 0; i < d; ++i)
      if (g[i] != 0) return true;
    return false;
  };
  for (const Vec& g : gen.rays)
    if (nontrivial(g)) out.ineqs.emplace_back(g.head(d).eval(), g[d]);
  for (const Vec& g : gen.lines)
    if (nontrivial(g)) out.eqs.emplace_back(g.head(d).eval(), g[d]);
  return out;
}

VPolyhedron intersect(const VPolyhedron& a, const VPolyhedron& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  if (a.is_empty() || b.is_empty()) return VPolyhedron::empty(a.dim);
  HPolyhedron ha = v_to_h(a), hb = v_to_h(b);
  HPolyhedron both;
  both.dim = a.dim;
  both.ineqs = ha.ineqs;
  both.ineqs.insert(both.ineqs.end(), hb.ineqs.begin(), hb.ineqs.end());
  both.eqs = ha.eqs;
  both.eqs.insert(both.eqs.end(), hb.eqs.begin(), hb.eqs.end());
  return h_to_v(both);
}

VPolyhedron project(const VPolyhedron& p, const std::vector<Eigen::Index>& keep) {
  VPolyhedron out;
  out.dim = static_cast<Eigen::Index>(keep.size());
  if (p.is_empty()) return VPolyhedron::empty(out.dim);
  auto pick = [&](const Vec& v) {
    Vec w(out.dim);
    for (size_t i = 0; i < keep.size(); ++i) w[static_cast<Eigen::Index>(i)] = v[keep[i]];
    return w;
  };
  auto is_zero = [](const Vec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v[i] != 0) return false;
    return true;
  };
  for (const Vec& v : p.vertices) out.vertices.push_back(pick(v));
  for (const Vec& r : p.rays) {
    Vec w = normalize_ray(pick(r));
    if (!is_zero(w)) out.rays.push_back(std::move(w));
  }
  for (const Vec& l : p.lines) {
    Vec w = normalize_line(pick(l));
    if (!is_zero(w)) out.lines.push_back(std::move(w));
  }
  return out;
}

bool member(const Vec& x, const HPolyhedron& p) {
  for (const auto& [a, b] : p.eqs)
    if (a.dot(x) != b) return false;
  for (const auto& [a, b] : p.ineqs)
    if (a.dot(x) < b) return false;
  return true;
}

bool member(const Vec& x, const VPolyhedron& p) {
  if (p.is_empty()) return false;
  return member(x, v_to_h(p));
}

}  // namespace polyrank
