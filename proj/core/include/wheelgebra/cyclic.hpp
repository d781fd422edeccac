#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wheelgebra/quiver.hpp"
#include "wheelgebra/rational.hpp"

namespace wg {

// Class of a closed path modulo rotation (a "necklace"), stored as the
// canonical rotation: the lexicographically least letter sequence, ties
// broken by the smallest rotation offset. Trivial loops [e_v] are distinct
// generators, one per vertex.
class CyclicWord {
 public:
  CyclicWord() = default;
  static CyclicWord trivial(int vertex);
  static CyclicWord raw(std::vector<int> letters);  // assumes canonical input

  bool is_trivial() const { return letters_.empty(); }
  int trivial_vertex() const { return vertex_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }

  Parity parity(const Quiver& q) const;
  int star_count(const Quiver& q) const;
  int diff_count(const Quiver& q) const;
  Path as_path(const Quiver& q) const;  // the stored rotation

  std::string str(const Quiver& q) const;
  auto operator<=>(const CyclicWord&) const = default;

 private:
  int vertex_ = -1;
  std::vector<int> letters_;
};

// Rotates a closed path to canonical form accumulating the Koszul sign of
// the rotation: [p] = sign * [canonical]. A sign of 0 means the class is
// forced to vanish (some rotation fixes the word with sign -1). Throws on
// open paths.
std::pair<CyclicWord, Rational> cyclic_normalize(const Quiver& q, const Path& p);

}  // namespace wg
