#pragma once

#include <functional>
#include <map>

#include "wheelgebra/bracket.hpp"
#include "wheelgebra/wheel.hpp"

namespace wg {

// Normal-ordered wheeled differential operator: each term consists of a
// multiplier symbol (a wheel term over the doubled quiver), a list of bare
// annihilators (one reversed arrow each, acting as derivations that raise the
// wheel degree), and one gluing port per annihilator. A port is a pair of
// symbol wires (out, in); applying the term runs the annihilators, then feeds
// each created slot through its port: the fresh output wire of annihilator k
// is joined to the port's in-wire and the port's out-wire closes back onto the
// fresh input wire. Ports with out == 0 leave the created slot free.
// Composition produces the normal-ordered composite; it is exact in the even
// regime. In the odd regime the flat normal form cannot absorb all Koszul
// crossings of cyclic symbol factors, so odd second-order structure is
// handled by the connection machinery instead.
class WheeledDiffOp {
 public:
  struct Port {
    int out = 0;  // symbol out-wire fed by the created slot (0 = none)
    int in = 0;   // symbol in-wire feeding the created slot (0 = none)
    auto operator<=>(const Port&) const = default;
  };
  struct Key {
    WheelKey sym;
    std::vector<int> annih;   // base arrows
    std::vector<Port> ports;  // aligned with annih
    auto operator<=>(const Key&) const = default;
  };

  WheeledDiffOp() = default;
  explicit WheeledDiffOp(const Quiver* q) : q_(q) {}
  static WheeledDiffOp zero(const Quiver& q) { return WheeledDiffOp(&q); }
  static WheeledDiffOp identity(const Quiver& q);
  static WheeledDiffOp multiplier(const WheelElement& m);
  // derivation attached to a word with one reversed arrow
  static WheeledDiffOp annihilator(const Quiver& q, const Path& xi);
  // necklace operator [a o d_e]: cut a matching arrow and splice `a` into the
  // cut (cyclic composition of a multiplier with one annihilator)
  static WheeledDiffOp necklace_op(const Quiver& q, const Path& a, int e);
  // necklace operator [d_e o d_f]: two annihilators wired into one cycle
  static WheeledDiffOp necklace_op2(const Quiver& q, int e, int f);

  const Quiver* quiver() const { return q_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;

  void add(const Key& k, const Rational& c);
  WheeledDiffOp& operator+=(const WheeledDiffOp& o);
  WheeledDiffOp& operator-=(const WheeledDiffOp& o);
  WheeledDiffOp scaled(const Rational& c) const;
  bool operator==(const WheeledDiffOp& o) const { return terms_ == o.terms_; }

  WheelElement apply(const WheelElement& u) const;
  WheeledDiffOp compose(const WheeledDiffOp& o) const;

  std::string str() const;

 private:
  const Quiver* q_ = nullptr;
  std::map<Key, Rational> terms_;
};

// Iterated-commutator principal symbol of an arbitrary operator-as-function:
// Gamma_n(D)(b_1,...,b_n) = [[..[D, b_1],..], b_n](1). The commutator with a
// multiplication is the twisted one: the subtracted composite is corrected by
// the block permutation moving the slots the operator prepends past the
// argument, and by the Koszul sign of the crossing. op_wheel_degree is the
// number of prepended slots (annihilator slots stack at the back and do not
// count).
using OpFn = std::function<WheelElement(const WheelElement&)>;
WheelElement principal_symbol(const Quiver& q, const OpFn& D, Parity op_parity,
                              int op_wheel_degree, const std::vector<WheelElement>& args);

// Symmetrized quadratic operators: the image of a two-letter necklace over
// the doubled quiver inside the operator algebra.
WheeledDiffOp weil_element(const Quiver& q, const CyclicWord& quad);

// Ordered-application action used by the single-vertex shadow, reexported
// here for the CLI.
WheelElement apply_op(const WheeledDiffOp& D, const WheelElement& u);

}  // namespace wg
