#include "wheelgebra/ncpoly.hpp"

#include <stdexcept>

namespace wg {

NCPoly NCPoly::path(const Quiver& q, const Path& p, Rational c) {
  NCPoly out(&q);
  out.add(p, c);
  return out;
}

NCPoly NCPoly::unit(const Quiver& q) {
  NCPoly out(&q);
  for (int v = 0; v < q.num_vertices(); ++v) out.add(Path::trivial(v), 1);
  return out;
}

void NCPoly::add(const Path& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (q_ == nullptr) q_ = o.q_;
  if (o.q_ && q_ != o.q_) throw std::invalid_argument("NCPoly: quiver mismatch");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (q_ == nullptr) q_ = o.q_;
  if (o.q_ && q_ != o.q_) throw std::invalid_argument("NCPoly: quiver mismatch");
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly out = *this;
  out += o;
  return out;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly out = *this;
  out -= o;
  return out;
}

NCPoly NCPoly::operator-() const { return scaled(-1); }

NCPoly NCPoly::scaled(const Rational& c) const {
  NCPoly out(q_);
  if (c == 0) return out;
  for (const auto& [p, coeff] : terms_) out.terms_.emplace(p, coeff * c);
  return out;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (c != 1) out += rat_str(c) + " ";
    out += p.str(*q_);
  }
  return out;
}

NCPoly path_compose(const Quiver& q, const Path& a, const Path& b) {
  NCPoly out(&q);
  auto p = path_concat(q, a, b);
  if (p) out.add(*p, 1);
  return out;
}

NCPoly ncpoly_mul(const NCPoly& f, const NCPoly& g) {
  if (f.quiver() && g.quiver() && f.quiver() != g.quiver())
    throw std::invalid_argument("ncpoly_mul: quiver mismatch");
  const Quiver* q = f.quiver() ? f.quiver() : g.quiver();
  NCPoly out(q);
  for (const auto& [p, c] : f.terms())
    for (const auto& [r, d] : g.terms()) {
      auto pr = path_concat(*q, p, r);
      if (pr) out.add(*pr, c * d);
    }
  return out;
}

}  // namespace wg
