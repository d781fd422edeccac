#pragma once

#include <map>

#include "wheelgebra/linalg.hpp"
#include "wheelgebra/ncpoly.hpp"
#include "wheelgebra/rational.hpp"

namespace wg {

// Differential operators on the tensor algebra of the arrow span of a
// single-vertex quiver, in the twisted-commutative sense: normal-ordered
// sums of a left-multiplication prefix and a list of derivations given by
// matrix units E_{ab} (sending the arrow b to the arrow a). Derivation lists
// are kept sorted; swapping two units costs the usual commutator correction.
class TwistedOp {
 public:
  struct Key {
    std::vector<int> prefix;                   // arrow letters
    std::vector<std::pair<int, int>> units;    // sorted E_{ab} factors
    auto operator<=>(const Key&) const = default;
  };

  TwistedOp() = default;
  explicit TwistedOp(const Quiver* q) : q_(q) {}
  static TwistedOp zero(const Quiver& q) { return TwistedOp(&q); }
  static TwistedOp identity(const Quiver& q);
  static TwistedOp multiplier(const Quiver& q, const Path& word);
  static TwistedOp derivation_unit(const Quiver& q, int a, int b);  // D_{E_{ab}}
  // derivation attached to a matrix over the arrow basis
  static TwistedOp derivation(const Quiver& q, const RatMatrix& phi);

  const Quiver* quiver() const { return q_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;        // largest derivation count
  int degree() const;       // prefix length (throws when mixed)

  void add(Key k, const Rational& c);  // normal-orders the unit list
  TwistedOp& operator+=(const TwistedOp& o);
  TwistedOp& operator-=(const TwistedOp& o);
  TwistedOp scaled(const Rational& c) const;
  bool operator==(const TwistedOp& o) const { return terms_ == o.terms_; }

  NCPoly apply(const NCPoly& f) const;
  TwistedOp compose(const TwistedOp& o) const;
  // twisted commutator: the reversed composite has its two prefix blocks
  // swapped before subtraction
  TwistedOp commutator(const TwistedOp& o) const;

  std::string str() const;

 private:
  const Quiver* q_ = nullptr;
  std::map<Key, Rational> terms_;
};

// Ordered application of a list of derivations to a word: the sum over all
// ways of hitting distinct letters in increasing position order.
NCPoly ordered_derivations_apply(const Quiver& q, const std::vector<RatMatrix>& ds,
                                 const Path& word);

}  // namespace wg
