#include "wheelgebra/quiver.hpp"

#include <stdexcept>

namespace wg {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> base_arrows,
               bool doubled, int star_parity, bool omega)
    : vertices_(std::move(vertices)),
      doubled_(doubled),
      omega_(omega),
      star_parity_(star_parity & 1) {
  for (int v = 0; v < num_vertices(); ++v) {
    if (!vertex_ids_.emplace(vertices_[v], v).second)
      throw std::invalid_argument("Quiver: duplicate vertex " + vertices_[v]);
  }
  for (auto& a : base_arrows) {
    if (a.tail < 0 || a.tail >= num_vertices() || a.head < 0 || a.head >= num_vertices())
      throw std::invalid_argument("Quiver: arrow endpoints out of range");
    a.stratum = Stratum::Base;
    a.base = static_cast<int>(arrows_.size());
    arrows_.push_back(a);
  }
  int nbase = static_cast<int>(arrows_.size());
  star_of_.assign(nbase, -1);
  diff_of_.assign(nbase, -1);
  if (doubled_) {
    for (int e = 0; e < nbase; ++e) {
      Arrow s;
      s.name = arrows_[e].name + "*";
      s.tail = arrows_[e].head;
      s.head = arrows_[e].tail;
      s.stratum = Stratum::Star;
      s.base = e;
      star_of_[e] = static_cast<int>(arrows_.size());
      arrows_.push_back(s);
    }
  }
  if (omega_) {
    for (int e = 0; e < nbase; ++e) {
      Arrow d;
      d.name = "d" + arrows_[e].name;
      d.tail = arrows_[e].tail;
      d.head = arrows_[e].head;
      d.stratum = Stratum::Diff;
      d.base = e;
      diff_of_[e] = static_cast<int>(arrows_.size());
      arrows_.push_back(d);
    }
  }
  for (int a = 0; a < num_arrows(); ++a) {
    if (!arrow_ids_.emplace(arrows_[a].name, a).second)
      throw std::invalid_argument("Quiver: duplicate arrow name " + arrows_[a].name);
  }
}

std::optional<int> Quiver::vertex_id(const std::string& name) const {
  auto it = vertex_ids_.find(name);
  if (it == vertex_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::arrow_id(const std::string& name) const {
  auto it = arrow_ids_.find(name);
  if (it == arrow_ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Quiver::base_arrows() const {
  std::vector<int> out;
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows_[a].stratum == Stratum::Base) out.push_back(a);
  return out;
}

int Quiver::star_of(int base) const {
  if (base < 0 || base >= static_cast<int>(star_of_.size()) || star_of_[base] < 0)
    throw std::invalid_argument("Quiver: no reversed arrow (quiver not doubled?)");
  return star_of_[base];
}

int Quiver::diff_of(int base) const {
  if (base < 0 || base >= static_cast<int>(diff_of_.size()) || diff_of_[base] < 0)
    throw std::invalid_argument("Quiver: no differential arrow (no omega extension?)");
  return diff_of_[base];
}

Parity Quiver::arrow_parity(int a) const {
  switch (arrows_[a].stratum) {
    case Stratum::Star:
      return Parity{static_cast<uint8_t>(star_parity_), 0};
    case Stratum::Diff:
      return Parity{0, 1};
    default:
      return Parity{0, 0};
  }
}

Path Path::trivial(int vertex) {
  Path p;
  p.vertex_ = vertex;
  return p;
}

Path Path::of(const Quiver& q, std::vector<int> letters) {
  if (letters.empty()) throw std::invalid_argument("Path::of: empty letter list");
  for (size_t i = 0; i + 1 < letters.size(); ++i) {
    if (q.arrow(letters[i]).head != q.arrow(letters[i + 1]).tail)
      throw std::invalid_argument("Path::of: arrows are not composable");
  }
  Path p;
  p.vertex_ = -1;
  p.letters_ = std::move(letters);
  return p;
}

int Path::tail(const Quiver& q) const {
  return is_trivial() ? vertex_ : q.arrow(letters_.front()).tail;
}

int Path::head(const Quiver& q) const {
  return is_trivial() ? vertex_ : q.arrow(letters_.back()).head;
}

int Path::star_count(const Quiver& q) const {
  int n = 0;
  for (int a : letters_)
    if (q.arrow(a).stratum == Stratum::Star) ++n;
  return n;
}

int Path::diff_count(const Quiver& q) const {
  int n = 0;
  for (int a : letters_)
    if (q.arrow(a).stratum == Stratum::Diff) ++n;
  return n;
}

Parity Path::parity(const Quiver& q) const {
  Parity p{0, 0};
  for (int a : letters_) {
    Parity ap = q.arrow_parity(a);
    p.s ^= ap.s;
    p.d ^= ap.d;
  }
  return p;
}

Path Path::sub(const Quiver& q, int from, int to) const {
  if (from == to) {
    int v = (from < length()) ? q.arrow(letters_[from]).tail
                              : (length() ? q.arrow(letters_.back()).head : vertex_);
    return trivial(v);
  }
  return Path::of(q, std::vector<int>(letters_.begin() + from, letters_.begin() + to));
}

std::string Path::str(const Quiver& q) const {
  if (is_trivial()) return "e_" + q.vertex_name(vertex_);
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += " ";
    out += q.arrow(letters_[i]).name;
  }
  return out;
}

std::optional<Path> path_concat(const Quiver& q, const Path& a, const Path& b) {
  if (a.head(q) != b.tail(q)) return std::nullopt;
  if (a.is_trivial()) return b;
  if (b.is_trivial()) return a;
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Path::of(q, std::move(letters));
}

}  // namespace wg
