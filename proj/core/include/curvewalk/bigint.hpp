#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace curvewalk {

// Arbitrary-precision integers and exact rationals. Everything that feeds a
// decay fit or a convolution table stays exact; floating point only appears
// in summary statistics.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division for b > 0 (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// cpp_rational's (num, den) constructor rejects negative denominators, so
// route every ratio through here.
inline Rational make_ratio(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

}  // namespace curvewalk
