#pragma once

#include <map>

#include "wheelgebra/quiver.hpp"
#include "wheelgebra/rational.hpp"

namespace wg {

// Element of the path algebra (over the doubled / omega-extended quiver when
// those strata are present): a finitely supported map Path -> Rational.
// Zero coefficients are never stored.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(const Quiver* q) : q_(q) {}
  static NCPoly zero(const Quiver& q) { return NCPoly(&q); }
  static NCPoly path(const Quiver& q, const Path& p, Rational c = 1);
  static NCPoly unit(const Quiver& q);  // sum of all vertex idempotents

  const Quiver* quiver() const { return q_; }
  const std::map<Path, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  void add(const Path& p, const Rational& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly scaled(const Rational& c) const;

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  const Quiver* q_ = nullptr;
  std::map<Path, Rational> terms_;
};

// p . q as paths, extended bilinearly to the algebra; non-composable products
// vanish and trivial paths act as the vertex idempotents.
NCPoly path_compose(const Quiver& q, const Path& a, const Path& b);
NCPoly ncpoly_mul(const NCPoly& f, const NCPoly& g);

}  // namespace wg
