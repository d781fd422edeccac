#pragma once

#include <map>
#include <tuple>

#include "wheelgebra/ncpoly.hpp"
#include "wheelgebra/wheel.hpp"

namespace wg {

// ---------------------------------------------------------------------------
// Tensor-square and tensor-cube values of the double brackets.

class DoubleTensor {
 public:
  DoubleTensor() = default;
  explicit DoubleTensor(const Quiver* q) : q_(q) {}

  const Quiver* quiver() const { return q_; }
  const std::map<std::pair<Path, Path>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Path& a, const Path& b, const Rational& c);
  DoubleTensor& operator+=(const DoubleTensor& o);
  DoubleTensor& operator-=(const DoubleTensor& o);
  DoubleTensor scaled(const Rational& c) const;
  bool operator==(const DoubleTensor& o) const { return terms_ == o.terms_; }

  DoubleTensor outer_left(const NCPoly& a) const;    // a.(x (x) y) = ax (x) y
  DoubleTensor outer_right(const NCPoly& b) const;   // (x (x) y).b = x (x) yb
  DoubleTensor inner_left(const NCPoly& a) const;    // a*(x (x) y) = x (x) ay
  DoubleTensor inner_right(const NCPoly& b) const;   // (x (x) y)*b = xb (x) y
  DoubleTensor flip_signed() const;                  // tau_(21), with Koszul sign
  NCPoly mult() const;                               // x (x) y -> xy

  std::string str() const;

 private:
  const Quiver* q_ = nullptr;
  std::map<std::pair<Path, Path>, Rational> terms_;
};

class TripleTensor {
 public:
  TripleTensor() = default;
  explicit TripleTensor(const Quiver* q) : q_(q) {}
  const Quiver* quiver() const { return q_; }
  const std::map<std::tuple<Path, Path, Path>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Path& a, const Path& b, const Path& c, const Rational& coeff);
  TripleTensor& operator+=(const TripleTensor& o);
  TripleTensor& operator-=(const TripleTensor& o);
  bool operator==(const TripleTensor& o) const { return terms_ == o.terms_; }
  // signed cyclic rotation tau_(123): x1 (x) x2 (x) x3 -> x3 (x) x1 (x) x2
  TripleTensor rotate_signed() const;

 private:
  const Quiver* q_ = nullptr;
  std::map<std::tuple<Path, Path, Path>, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Double derivations and the double (Schouten-Nijenhuis) bracket.

// xi must contain exactly one reversed arrow; returns the Sweedler expansion
// of xi applied to p, a sum of ordered pairs.
DoubleTensor apply_double_derivation(const Quiver& q, const Path& xi, const Path& p);

// The double bracket on the path algebra of the doubled quiver, extended to
// arbitrary words: a sum over pairs of a reversed arrow in one argument and a
// matching arrow in the other, reconnecting prefixes and suffixes. The sign
// regime follows the quiver's star parity.
DoubleTensor double_bracket(const NCPoly& f, const NCPoly& g);
DoubleTensor double_bracket_words(const Quiver& q, const Path& f, const Path& g);

// Wheeled bracket: on degree-one generators it is (12) applied to the double
// bracket; extended to all of F by the twisted Leibniz rule and compatibility
// with contractions.
WheelElement wheeled_bracket(const WheelElement& u, const WheelElement& v);

// ---------------------------------------------------------------------------
// Necklace Lie bialgebra on cyclic words.
//
// The bracket glues two necklaces along a matched (arrow, reversed-arrow)
// pair; its orientation is normalized so that evaluation on representation
// varieties matches the cotangent Poisson bracket {X_e, X_{e*}} = id pairing.
WheelElement necklace_bracket(const Quiver& q, const CyclicWord& a, const CyclicWord& b);

// Antisymmetric (super-wedge) combinations of pairs of cyclic words.
class WedgePairs {
 public:
  WedgePairs() = default;
  explicit WedgePairs(const Quiver* q) : q_(q) {}
  const Quiver* quiver() const { return q_; }
  const std::map<std::pair<CyclicWord, CyclicWord>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const CyclicWord& a, const CyclicWord& b, const Rational& c);
  WedgePairs& operator+=(const WedgePairs& o);
  WedgePairs& operator-=(const WedgePairs& o);
  bool operator==(const WedgePairs& o) const { return terms_ == o.terms_; }
  std::string str() const;

 private:
  const Quiver* q_ = nullptr;
  std::map<std::pair<CyclicWord, CyclicWord>, Rational> terms_;
};

// Cobracket: splits one necklace at an internal matched pair into the two
// complementary arcs; signs follow the same splice conventions as the bracket.
WedgePairs necklace_cobracket(const Quiver& q, const CyclicWord& c);

// Lifts of the necklace structure maps used by the flat BV operator:
// {-,-}: A (x) A_cyc -> A and delta: A -> A (x) A_cyc.
NCPoly lifted_bracket(const NCPoly& a, const CyclicWord& c);

class HalfOpen {
 public:
  HalfOpen() = default;
  explicit HalfOpen(const Quiver* q) : q_(q) {}
  const Quiver* quiver() const { return q_; }
  const std::map<std::pair<Path, CyclicWord>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Path& a, const CyclicWord& c, const Rational& coeff);
  HalfOpen& operator+=(const HalfOpen& o);
  HalfOpen& operator-=(const HalfOpen& o);
  bool operator==(const HalfOpen& o) const { return terms_ == o.terms_; }

 private:
  const Quiver* q_ = nullptr;
  std::map<std::pair<Path, CyclicWord>, Rational> terms_;
};

HalfOpen lifted_cobracket(const NCPoly& a);

// ---------------------------------------------------------------------------
// The splice engine. A site addresses one letter of a term: strands
// 0..m-1 are the tensor slots, strand m+c is the c-th cyclic word.
struct Site {
  int strand = 0;
  int pos = 0;
  auto operator<=>(const Site&) const = default;
};

// Cuts the letters at sites S and P out of the term, reconnects
// (piece before P) -> (piece after S) and (piece before S) -> (piece after P),
// renumbers wires, and adds the result to `out` with the mechanical Koszul
// sign of the rearrangement times `coeff`. S must hold a star or base letter
// and P the matching partner; the caller supplies the orientation sign inside
// `coeff`.
void splice_pair(const Quiver& q, const WheelKey& key, const Rational& coeff,
                 Site S, Site P, WheelElement& out);

// Raw block concatenation of two canonical terms (no cyclic re-sorting); the
// returned sign is the Koszul cost of interleaving the blocks.
std::pair<WheelKey, int> concat_raw(const Quiver& q, const WheelKey& a, const WheelKey& b);

// Action of a word with exactly one reversed arrow as a derivation raising the
// wheel degree by one: the word is prepended as a new slot and its star letter
// is paired against every matching arrow of u.
WheelElement theta_apply(const Quiver& q, const Path& xi, const WheelElement& u);

// Total contraction: pairs every reversed arrow against every matching
// differential arrow within each term (one pair per contribution).
WheelElement contract_iota(const WheelElement& u);

}  // namespace wg
