#pragma once

#include <map>
#include <string>
#include <vector>

#include "wheelgebra/rational.hpp"

namespace wg {

// Monomial in commuting variables: sorted (variable, exponent) pairs.
struct Monomial {
  std::vector<std::pair<int, int>> factors;
  auto operator<=>(const Monomial&) const = default;
  static Monomial one() { return {}; }
  static Monomial var(int v) { return {{{v, 1}}}; }
  Monomial times(const Monomial& o) const;
  int degree() const;
};

// Exact multivariate polynomial, optionally multiplied by an exterior word in
// odd variables (sorted, strictly increasing). Even polynomials are the terms
// with an empty odd word.
class Poly {
 public:
  struct Key {
    Monomial mono;
    std::vector<int> odd;
    auto operator<=>(const Key&) const = default;
  };

  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly variable(int v);
  static Poly odd_variable(int v);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool has_odd() const;

  void add_term(const Monomial& m, const std::vector<int>& odd, const Rational& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly derivative(int var) const;       // even partial
  Poly odd_derivative(int var) const;   // left derivative in an odd variable
  Rational eval(const std::map<int, Rational>& point) const;  // even terms only

  std::string str(const std::vector<std::string>& names,
                  const std::vector<std::string>& odd_names) const;

 private:
  std::map<Key, Rational> terms_;
};

using CommPoly = Poly;   // invariant: no odd part
using SuperPoly = Poly;

}  // namespace wg
