#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wheelgebra/permutation.hpp"

namespace wg {

enum class Stratum : uint8_t { Base, Star, Diff };

struct Arrow {
  std::string name;
  int tail = 0;
  int head = 0;
  Stratum stratum = Stratum::Base;
  int base = -1;  // for Star/Diff arrows: index of the underlying base arrow
};

// A quiver together with its optional doubling (a reversed arrow e* per base
// arrow e) and differential extension (a parallel arrow de per base arrow e).
// star_parity selects the sign regime: 0 makes the reversed arrows even
// (Poisson calculus), 1 makes them odd (Schouten-Nijenhuis / BV calculus).
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> base_arrows,
         bool doubled, int star_parity, bool omega);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  std::optional<int> vertex_id(const std::string& name) const;

  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  std::optional<int> arrow_id(const std::string& name) const;

  bool doubled() const { return doubled_; }
  bool omega() const { return omega_; }
  int star_parity() const { return star_parity_; }

  std::vector<int> base_arrows() const;
  // e -> e* (requires doubling), e -> de (requires omega extension).
  int star_of(int base) const;
  int diff_of(int base) const;

  Parity arrow_parity(int a) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_ids_;
  std::map<std::string, int> arrow_ids_;
  std::vector<int> star_of_, diff_of_;
  bool doubled_ = false;
  bool omega_ = false;
  int star_parity_ = 0;
};

// A path: either the trivial path e_v at a vertex, or a composable sequence
// of arrows read left to right (head of each arrow = tail of the next).
class Path {
 public:
  Path() = default;
  static Path trivial(int vertex);
  static Path of(const Quiver& q, std::vector<int> letters);

  bool is_trivial() const { return letters_.empty(); }
  int trivial_vertex() const { return vertex_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  int letter(int i) const { return letters_[i]; }

  int tail(const Quiver& q) const;
  int head(const Quiver& q) const;
  bool closed(const Quiver& q) const { return tail(q) == head(q); }

  int star_count(const Quiver& q) const;
  int diff_count(const Quiver& q) const;
  Parity parity(const Quiver& q) const;

  // Subword [from, to); carries the vertex at position `from` so that empty
  // slices are trivial paths at the cut point.
  Path sub(const Quiver& q, int from, int to) const;

  std::string str(const Quiver& q) const;
  auto operator<=>(const Path&) const = default;

 private:
  int vertex_ = -1;                // for trivial paths
  std::vector<int> letters_;
};

// Concatenation p then q; nullopt when endpoints do not match (the product of
// non-composable paths is zero in the path algebra).
std::optional<Path> path_concat(const Quiver& q, const Path& a, const Path& b);

}  // namespace wg
