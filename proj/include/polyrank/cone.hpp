#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "polyrank/groebner.hpp"
#include "polyrank/polyhedron.hpp"
#include "polyrank/polynomial.hpp"

namespace polyrank {

// Finite monomial coordinate system: polynomials embed as dense vectors over
// the monomials registered here.
class MonomialBasis {
 public:
  Eigen::Index add(const Monomial& m);
  void add_support(const Polynomial& p);

  Eigen::Index size() const { return static_cast<Eigen::Index>(mons_.size()); }
  const Monomial& monomial(Eigen::Index i) const { return mons_[static_cast<size_t>(i)]; }
  bool contains(const Monomial& m) const { return index_.count(m) > 0; }
  Eigen::Index index_of(const Monomial& m) const;

  Vec to_vec(const Polynomial& p) const;  // pre: support registered
  Polynomial to_poly(const Vec& v) const;

 private:
  std::vector<Monomial> mons_;
  std::map<Monomial, Eigen::Index> index_;
};

// V-representation whose coordinates are monomials, generators kept as
// polynomials.
struct PolyVRep {
  std::vector<Polynomial> vertices;
  std::vector<Polynomial> rays;
  std::vector<Polynomial> lines;
  bool empty = false;
};

// <Z, P>: ideal of zeros plus finitely generated cone of positives.  Positives
// are stored as normal forms w.r.t. Z, deduplicated, and always contain 1.
class AlgebraicCone {
 public:
  AlgebraicCone() = default;
  AlgebraicCone(std::set<std::string> universe, std::vector<Polynomial> zeros,
                std::vector<Polynomial> positives);

  static AlgebraicCone inconsistent(std::set<std::string> universe);

  const std::set<std::string>& universe() const { return universe_; }
  const Ideal& zeros() const { return zeros_; }
  const std::vector<Polynomial>& positives() const { return positives_; }

  bool is_inconsistent() const { return zeros_.contains_one(); }

  // p in <Z> + cone(P), decided exactly in monomial coordinates
  bool member(const Polynomial& p) const;

 private:
  std::set<std::string> universe_;
  Ideal zeros_;
  std::vector<Polynomial> positives_;
};

// Implied-equality saturation: moves the lineality of the positive cone into
// the ideal until the ideal stabilizes.  Preserves the represented set.
AlgebraicCone regularize(const AlgebraicCone& c);

// The polyhedron of linear polynomials contained in the cone, over coordinates
// {1} and the universe variables.
PolyVRep linearize(const AlgebraicCone& c);

// {q in Q[Y]^1 : f(q) in c} where f maps each y to images.at(y); coordinates
// are {1} and the Y variables.
PolyVRep linear_preimage(const AlgebraicCone& c,
                         const std::map<std::string, Polynomial>& images);

// Polyhedron of cone members supported on `keep` with total degree at most
// max_degree, over monomial coordinates.
PolyVRep project_members(const AlgebraicCone& c, const std::set<std::string>& keep,
                         int max_degree);

// Sound degree-bounded under-approximation of the intersection.
AlgebraicCone intersect_cones(const AlgebraicCone& a, const AlgebraicCone& b,
                              int max_degree);

// <Z, P, V>: algebraic cone plus convex hull of vertices; empty iff V empty.
struct AlgebraicPolyhedron {
  std::set<std::string> universe;
  Ideal zeros;
  std::vector<Polynomial> positives;
  std::vector<Polynomial> vertices;

  bool is_empty() const { return vertices.empty(); }
  AlgebraicCone cone_part() const {
    return AlgebraicCone(universe, zeros.generators(), positives);
  }
};

bool polyhedron_member(const Polynomial& p, const AlgebraicPolyhedron& a);

}  // namespace polyrank
