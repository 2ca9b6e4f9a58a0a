#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace polyrank {

// Power product of variables; exponents are strictly positive, entries sorted
// by variable name.  The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;

  static Monomial one() { return Monomial(); }
  static Monomial var(const std::string& name, int exp = 1);

  bool is_one() const { return exps_.empty(); }
  int degree() const;
  int exponent(const std::string& name) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // pre: this->divides(other) is false for the *other* direction; computes other/this
  Monomial divide_into(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  const std::vector<std::pair<std::string, int>>& exponents() const { return exps_; }
  std::set<std::string> support() const;
  // restriction to a variable subset
  Monomial restrict_to(const std::set<std::string>& vars) const;

  bool operator==(const Monomial&) const = default;
  // container order only; semantic orders live in MonomialOrder
  auto operator<=>(const Monomial&) const = default;

  std::string str() const;

 private:
  std::vector<std::pair<std::string, int>> exps_;
};

// Total well-order on monomials compatible with multiplication.  Grevlex by
// default; block orders eliminate a variable set (any monomial touching the
// block dominates every block-free monomial).
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(); }
  static MonomialOrder eliminate(std::set<std::string> block) {
    MonomialOrder o;
    o.kind_ = Kind::Block;
    o.block_ = std::move(block);
    return o;
  }

  Kind kind() const { return kind_; }
  const std::set<std::string>& eliminated() const { return block_; }

  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

 private:
  Kind kind_ = Kind::Grevlex;
  std::set<std::string> block_;
};

bool grevlex_less(const Monomial& a, const Monomial& b);

}  // namespace polyrank
