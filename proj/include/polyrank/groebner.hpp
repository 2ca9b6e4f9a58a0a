#pragma once

#include <optional>
#include <set>
#include <vector>

#include "polyrank/polynomial.hpp"

namespace polyrank {

// Reduced Groebner basis of the given generators.  Terminates on any input;
// basis polynomials are monic and sorted by descending leading monomial.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens,
                                       const MonomialOrder& order);

// Remainder of multivariate division by a Groebner basis.  Linear in p.
Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

// Polynomial ideal with a cached reduced Groebner basis.  Immutable after
// construction.
class Ideal {
 public:
  Ideal() : order_(MonomialOrder::grevlex()) {}
  explicit Ideal(std::vector<Polynomial> gens,
                 MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& basis() const;
  const MonomialOrder& order() const { return order_; }

  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;
  bool contains_one() const;
  bool is_trivial() const { return basis().empty(); }  // the zero ideal

  std::set<std::string> support() const;

 private:
  std::vector<Polynomial> gens_;
  MonomialOrder order_;
  mutable std::optional<std::vector<Polynomial>> basis_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);

// Generators of I \cap Q[keep], via a block elimination order.
Ideal elimination_ideal(const Ideal& ideal, const std::set<std::string>& keep);

// Spanning set (linearly independent) of {f in I : deg f <= d} as a Q-vector
// space, with monomial multipliers drawn from `universe`.
std::vector<Polynomial> bounded_degree_slice(const Ideal& ideal, int d,
                                             const std::set<std::string>& universe);

// Row-reduce the given polynomials as vectors over their monomial support;
// returns a linearly independent spanning set.
std::vector<Polynomial> linear_reduce(std::vector<Polynomial> polys);

}  // namespace polyrank
