#pragma once

#include <map>

#include "wheelgebra/cyclic.hpp"
#include "wheelgebra/ncpoly.hpp"
#include "wheelgebra/permutation.hpp"
#include "wheelgebra/quiver.hpp"

namespace wg {

// Canonical wheel term of degree m. The right permutation of the induced
// S_m x S_m module is normalized to the identity, so slot k carries output
// wire k and input wire sigma[k]; equivalently input wire i is attached to
// slot sigma^{-1}(i). Cyclic classes are kept sorted, with Koszul signs
// absorbed into the coefficient.
//
// The letter order used for every sign computation is: slot 0 letters, slot 1
// letters, ..., then the cyclic words in list order (each at its stored
// rotation).
struct WheelKey {
  std::vector<int> sigma;  // one-line notation, sigma[k] = input label of slot k
  std::vector<Path> word;
  std::vector<CyclicWord> cycs;

  int degree() const { return static_cast<int>(word.size()); }
  auto operator<=>(const WheelKey&) const = default;
};

class WheelElement {
 public:
  WheelElement() = default;
  explicit WheelElement(const Quiver* q) : q_(q) {}

  static WheelElement zero(const Quiver& q) { return WheelElement(&q); }
  static WheelElement unit(const Quiver& q);  // the empty degree-0 term
  static WheelElement from_path(const Quiver& q, const Path& p, Rational c = 1);
  static WheelElement from_ncpoly(const NCPoly& f);
  static WheelElement from_cyclic(const Quiver& q, const CyclicWord& c, Rational coeff = 1);

  const Quiver* quiver() const { return q_; }
  const std::map<WheelKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Inserts a term in general position: folds sigma_R into canonical form,
  // sorts the cyclic part, and accumulates all Koszul signs. The cyclic words
  // passed in must already be individually canonical.
  void add_general(Rational coeff, const Perm& sigma_l, const Perm& sigma_r,
                   std::vector<Path> word, std::vector<CyclicWord> cycs);
  void add_key(const WheelKey& k, const Rational& c);

  WheelElement& operator+=(const WheelElement& o);
  WheelElement& operator-=(const WheelElement& o);
  WheelElement operator+(const WheelElement& o) const;
  WheelElement operator-(const WheelElement& o) const;
  WheelElement scaled(const Rational& c) const;
  bool operator==(const WheelElement& o) const { return terms_ == o.terms_; }

  // Wheel degree if all terms agree, -1 for 0, throws if mixed.
  int homogeneous_degree() const;
  bool mixed_degree() const;

  std::string str() const;

 private:
  const Quiver* q_ = nullptr;
  std::map<WheelKey, Rational> terms_;
};

// Graded commutative product F_m x F_n -> F_{m+n}.
WheelElement wheel_product(const WheelElement& u, const WheelElement& v);

// Left action of (alpha, beta) in S_m x S_m; alpha relabels input wires,
// beta relabels output wires.
WheelElement wheel_act(const Perm& alpha, const Perm& beta, const WheelElement& u);
WheelElement wheel_act_diag(const Perm& sigma, const WheelElement& u);

// Contraction mu_{i,j} (1-based): joins output wire i to input wire j.
// mu_{i,j} = mu_{1,1} o ((1,2,...,j) x (1,2,...,i)).
WheelElement contract(const WheelElement& u, int i, int j);

bool wheel_equal(const WheelElement& u, const WheelElement& v);

// Total bidegree parities of a term's letters.
Parity term_parity(const Quiver& q, const WheelKey& k);
int term_star_count(const Quiver& q, const WheelKey& k);
int term_diff_count(const Quiver& q, const WheelKey& k);

std::string term_str(const Quiver& q, const WheelKey& k, const Rational& c);

}  // namespace wg
