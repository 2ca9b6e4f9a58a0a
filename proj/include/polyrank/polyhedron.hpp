#pragma once

#include <utility>
#include <vector>

#include "polyrank/rational.hpp"

namespace polyrank {

// Generator form of a convex polyhedron: cone(rays) + span(lines) + conv(vertices).
// The empty polyhedron has no vertices; a nonempty polyhedron always carries at
// least one vertex.
struct VPolyhedron {
  Eigen::Index dim = 0;
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
  std::vector<Vec> lines;

  bool is_empty() const { return vertices.empty(); }

  static VPolyhedron empty(Eigen::Index dim);
  static VPolyhedron point(const Vec& v);
  // conical hull (0 is always a member)
  static VPolyhedron cone(Eigen::Index dim, std::vector<Vec> rays,
                          std::vector<Vec> lines = {});
  static VPolyhedron hull(Eigen::Index dim, std::vector<Vec> vertices,
                          std::vector<Vec> rays = {}, std::vector<Vec> lines = {});
};

// Constraint form: a.x >= b and a.x == b rows.
struct HPolyhedron {
  Eigen::Index dim = 0;
  std::vector<std::pair<Vec, Rational>> ineqs;
  std::vector<std::pair<Vec, Rational>> eqs;

  static HPolyhedron infeasible(Eigen::Index dim);
};

// Generators of the cone {x : eq.x = 0 for eq in eqs, c.x >= 0 for c in ineqs}.
// Double description with lineality tracked explicitly; returned rays are
// extreme modulo the lineality space.
struct GeneratorSet {
  std::vector<Vec> lines;
  std::vector<Vec> rays;
};
GeneratorSet cone_generators(Eigen::Index dim, const std::vector<Vec>& eqs,
                             const std::vector<Vec>& ineqs);

HPolyhedron v_to_h(const VPolyhedron& p);
VPolyhedron h_to_v(const HPolyhedron& p);

VPolyhedron intersect(const VPolyhedron& a, const VPolyhedron& b);

// Coordinate projection; keep[i] names the source coordinate of output axis i.
VPolyhedron project(const VPolyhedron& p, const std::vector<Eigen::Index>& keep);

bool member(const Vec& x, const HPolyhedron& p);
bool member(const Vec& x, const VPolyhedron& p);

// positive scaling so the first nonzero coordinate is +-1
Vec normalize_ray(Vec v);

}  // namespace polyrank
