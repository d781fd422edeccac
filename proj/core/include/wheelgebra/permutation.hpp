#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wheelgebra/rational.hpp"

namespace wg {

// Permutations of {0..n-1} in one-line notation: map()[i] is the image of i.
// Printed 1-based in disjoint cycle notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);                       // identity on n points
  explicit Perm(std::vector<int> images);     // from one-line notation

  static Perm identity(int n) { return Perm(n); }
  // The cycle (a0 a1 ... ak-1) on n points, 0-based entries.
  static Perm cycle(int n, const std::vector<int>& cyc);
  // Forward cycle (1,2,...,j) of the contraction axioms: 0->1->...->j-1->0.
  static Perm rotation(int n, int j) ;

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm after(const Perm& first) const;   // (*this) o first
  friend Perm operator*(const Perm& a, const Perm& b) { return a.after(b); }

  // Block embedding: given block sizes (i_1,...,i_l), sends a permutation of
  // the l blocks to the permutation of sum(i_k) points that moves the blocks
  // around, preserving order inside each block.
  static Perm block(const Perm& sigma, const std::vector<int>& sizes);
  // Block transposition (12)^{m,n}: the first m points move past the last n.
  static Perm block_swap(int m, int n);

  // Restriction to {0..n-1} minus {removed}, renumbered order-preservingly.
  // Requires that the permutation fixes the removed point or the caller has
  // already dealt with it; here we just drop position `removed_src` and image
  // `removed_img`.
  Perm drop(int removed_src, int removed_img) const;

  std::string cycle_string() const;       // e.g. "(1 2)(3 4 5)", "id"
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

// Sign of the plain (unsigned) permutation.
int perm_sign(const Perm& p);

// Koszul sign of the signed braiding tau_sigma on factors with the given
// bidegree parities: for each inverted pair (i<j, sigma(i)>sigma(j)) the
// factors cross and contribute (-1)^{s_i s_j + d_i d_j}.
struct Parity {
  uint8_t s = 0;  // star-degree parity
  uint8_t d = 0;  // form-degree parity
  auto operator<=>(const Parity&) const = default;
};

inline int swap_sign(Parity a, Parity b) {
  return ((a.s & b.s) ^ (a.d & b.d)) ? -1 : 1;
}

int koszul_sign(const Perm& sigma, const std::vector<Parity>& parities);

// Convenience for the single-grading case (parities 0|1 in the star slot).
int koszul_sign(const Perm& sigma, const std::vector<int>& parities);

// Sign of the reordering that sends old position i to new position pos[i],
// crossing factors with the given parities. pos must be a permutation.
int reorder_sign(const std::vector<int>& pos, const std::vector<Parity>& parities);

}  // namespace wg
