#pragma once

#include <map>

#include "wheelgebra/bracket.hpp"
#include "wheelgebra/wheel.hpp"

namespace wg {

// Bimodule connection on the double derivations of a path algebra, stored by
// its correction values on the generators: for each plain arrow e, the left
// value lives in forms (x) derivations and the right value in derivations (x)
// forms. A value is a wheel element whose terms consist of one word slot
// carrying exactly one reversed and one differential arrow (the differential
// one first for left values, last for right values), optionally times plain
// cyclic factors. The trivial connection stores nothing.
class Connection {
 public:
  Connection() = default;
  explicit Connection(const Quiver* q) : q_(q) {}
  static Connection trivial(const Quiver& q) { return Connection(&q); }

  const Quiver* quiver() const { return q_; }
  void set_left(int base_arrow, WheelElement v);
  void set_right(int base_arrow, WheelElement v);
  WheelElement left(int base_arrow) const;
  WheelElement right(int base_arrow) const;
  WheelElement value(int base_arrow) const;  // left + right
  bool is_trivial() const { return left_.empty() && right_.empty(); }

 private:
  void check_value(int base_arrow, const WheelElement& v, bool left) const;
  const Quiver* q_ = nullptr;
  std::map<int, WheelElement> left_, right_;
};

// Leibniz extension of the connection: plain arrows go to their differential
// arrows, reversed arrows to the stored values, differential arrows to zero;
// each replacement carries the sign (-1)^{# differential letters before it}.
WheelElement nabla_extend(const Connection& nab, const WheelElement& u);

// The canonical element, as the sum over arrows of the necklaces [e* de],
// and the rank element obtained by totally contracting it.
WheelElement iota_element(const Quiver& q);
WheelElement rank_element(const Quiver& q);

// D = (total contraction) o (connection extension). Lowers the count of
// reversed arrows by one and preserves the wheel degree.
WheelElement bv_operator(const Connection& nab, const WheelElement& u);

// Torsion as the connection applied to the canonical element, and its
// evaluation on a pair of generators (contracting the two form slots in
// cyclic order from the derivation slot).
WheelElement torsion(const Connection& nab);
WheelElement torsion_pair(const Connection& nab, int arrow_a, int arrow_b);
// Independent route: (nabla_r)_{da}(db) - flip (nabla_l)_{db}(da) - {{da,db}}_L.
WheelElement torsion_formula(const Connection& nab, int arrow_a, int arrow_b);

// Trace of the squared connection: close each twice-differentiated generator
// against its dual basis element. Contraction with the resulting two-form
// reproduces D^2.
WheelElement curvature_trace(const Connection& nab);

// Contraction i_omega: pairs every differential letter of omega against the
// reversed arrows of u, one after the other; terms whose differential letters
// cannot all be absorbed are dropped.
WheelElement contract_form(const WheelElement& omega, const WheelElement& u);

// Restriction of D to a degree-one generator slot.
WheelElement divergence(const Connection& nab, int base_arrow);

// Enumeration of admissible value words for the generator of `e` (one
// reversed plus one differential arrow, at most `extra` additional plain
// letters), and the torsion-free subspace of the span of all such values.
std::vector<Path> connection_value_words(const Quiver& q, int e, bool left, int extra);

struct ConnectionBasis {
  std::vector<std::pair<int, Path>> words;  // (arrow, word); left words first
  int num_left = 0;
  std::vector<std::vector<Rational>> torsion_free;  // kernel of the torsion map
};

ConnectionBasis connection_basis(const Quiver& q, int extra);
Connection connection_from_coeffs(const Quiver& q, const ConnectionBasis& basis,
                                  const std::vector<Rational>& coeffs);

}  // namespace wg
