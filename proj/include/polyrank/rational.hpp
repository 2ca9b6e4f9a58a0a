#pragma once

#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace polyrank {

// Exact rational scalar; mpq_rational keeps gcd(|num|, den) = 1 and den > 0.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline std::string to_string(const Rational& r) {
  return r.str();
}

inline bool is_integer(const Rational& r) {
  return denominator(r) == 1;
}

}  // namespace polyrank
