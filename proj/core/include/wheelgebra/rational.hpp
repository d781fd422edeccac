#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wg {

// Exact arbitrary-precision rational scalars. Everything in the kernel is
// computed over these; there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

// Renders "p/q", or just "p" when q == 1.
inline std::string rat_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace wg
