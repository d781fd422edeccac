#include "wheelgebra/cyclic.hpp"

#include <stdexcept>

namespace wg {

CyclicWord CyclicWord::trivial(int vertex) {
  CyclicWord c;
  c.vertex_ = vertex;
  return c;
}

CyclicWord CyclicWord::raw(std::vector<int> letters) {
  CyclicWord c;
  c.letters_ = std::move(letters);
  return c;
}

Parity CyclicWord::parity(const Quiver& q) const {
  Parity p{0, 0};
  for (int a : letters_) {
    Parity ap = q.arrow_parity(a);
    p.s ^= ap.s;
    p.d ^= ap.d;
  }
  return p;
}

int CyclicWord::star_count(const Quiver& q) const {
  int n = 0;
  for (int a : letters_)
    if (q.arrow(a).stratum == Stratum::Star) ++n;
  return n;
}

int CyclicWord::diff_count(const Quiver& q) const {
  int n = 0;
  for (int a : letters_)
    if (q.arrow(a).stratum == Stratum::Diff) ++n;
  return n;
}

Path CyclicWord::as_path(const Quiver& q) const {
  if (is_trivial()) return Path::trivial(vertex_);
  return Path::of(q, letters_);
}

std::string CyclicWord::str(const Quiver& q) const {
  if (is_trivial()) return "[e_" + q.vertex_name(vertex_) + "]";
  std::string out = "[";
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += " ";
    out += q.arrow(letters_[i]).name;
  }
  return out + "]";
}

std::pair<CyclicWord, Rational> cyclic_normalize(const Quiver& q, const Path& p) {
  if (!p.closed(q)) throw std::invalid_argument("cyclic_normalize: path is not closed");
  if (p.is_trivial()) return {CyclicWord::trivial(p.trivial_vertex()), 1};

  const int n = p.length();
  // Accumulated sign of each rotation: [w_0] = sign[r] * [w_r], where w_{r+1}
  // moves the front letter past the remaining n-1 letters.
  std::vector<std::vector<int>> rots(n);
  std::vector<int> sign(n, 1);
  std::vector<int> cur = p.letters();
  Parity total = p.parity(q);
  for (int r = 0; r < n; ++r) {
    rots[r] = cur;
    if (r + 1 < n) {
      Parity front = q.arrow_parity(cur[0]);
      Parity rest{static_cast<uint8_t>(total.s ^ front.s),
                  static_cast<uint8_t>(total.d ^ front.d)};
      int s = swap_sign(front, rest);
      sign[r + 1] = sign[r] * s;
      cur.push_back(cur.front());
      cur.erase(cur.begin());
    }
  }
  int best = 0;
  for (int r = 1; r < n; ++r)
    if (rots[r] < rots[best]) best = r;
  for (int r = 0; r < n; ++r)
    if (rots[r] == rots[best] && sign[r] != sign[best])
      return {CyclicWord::raw(rots[best]), 0};  // [w] = -[w]
  return {CyclicWord::raw(rots[best]), sign[best]};
}

}  // namespace wg
