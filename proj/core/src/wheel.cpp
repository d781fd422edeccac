#include "wheelgebra/wheel.hpp"

#include <stdexcept>

namespace wg {

namespace {

Parity cyc_parity(const Quiver& q, const CyclicWord& c) { return c.parity(q); }

Parity combine(Parity a, Parity b) {
  return Parity{static_cast<uint8_t>(a.s ^ b.s), static_cast<uint8_t>(a.d ^ b.d)};
}

}  // namespace

WheelElement WheelElement::unit(const Quiver& q) {
  WheelElement u(&q);
  u.add_key(WheelKey{}, 1);
  return u;
}

WheelElement WheelElement::from_path(const Quiver& q, const Path& p, Rational c) {
  WheelElement u(&q);
  u.add_general(c, Perm(1), Perm(1), {p}, {});
  return u;
}

WheelElement WheelElement::from_ncpoly(const NCPoly& f) {
  WheelElement u(f.quiver());
  for (const auto& [p, c] : f.terms()) u.add_general(c, Perm(1), Perm(1), {p}, {});
  return u;
}

WheelElement WheelElement::from_cyclic(const Quiver& q, const CyclicWord& c, Rational coeff) {
  WheelElement u(&q);
  u.add_general(coeff, Perm(0), Perm(0), {}, {c});
  return u;
}

void WheelElement::add_key(const WheelKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void WheelElement::add_general(Rational coeff, const Perm& sigma_l, const Perm& sigma_r,
                               std::vector<Path> word, std::vector<CyclicWord> cycs) {
  if (coeff == 0) return;
  const int m = static_cast<int>(word.size());
  if (sigma_l.degree() != m || sigma_r.degree() != m)
    throw std::invalid_argument("WheelElement: permutation degree != word length");

  Perm sl = sigma_l;
  if (!sigma_r.is_identity()) {
    // (sl, sr) (x) X  =  (sl sr^{-1}, id) (x) tau_{sr}(X)
    std::vector<Parity> ps(m);
    for (int k = 0; k < m; ++k) ps[k] = word[k].parity(*q_);
    coeff *= koszul_sign(sigma_r, ps);
    Perm inv = sigma_r.inverse();
    std::vector<Path> neww(m);
    for (int k = 0; k < m; ++k) neww[k] = word[inv(k)];
    word = std::move(neww);
    sl = sigma_l.after(inv);
  }

  // Insertion sort of the cyclic part with Koszul signs per adjacent swap.
  int sign = 1;
  for (size_t i = 1; i < cycs.size(); ++i) {
    size_t j = i;
    while (j > 0 && cycs[j] < cycs[j - 1]) {
      sign *= swap_sign(cyc_parity(*q_, cycs[j]), cyc_parity(*q_, cycs[j - 1]));
      std::swap(cycs[j], cycs[j - 1]);
      --j;
    }
  }
  for (size_t i = 0; i + 1 < cycs.size(); ++i) {
    if (cycs[i] == cycs[i + 1]) {
      Parity p = cyc_parity(*q_, cycs[i]);
      if (swap_sign(p, p) == -1) return;  // odd square in SuperSym
    }
  }
  add_key(WheelKey{sl.images(), std::move(word), std::move(cycs)}, coeff * sign);
}

WheelElement& WheelElement::operator+=(const WheelElement& o) {
  if (q_ == nullptr) q_ = o.q_;
  if (o.q_ && q_ != o.q_) throw std::invalid_argument("WheelElement: quiver mismatch");
  for (const auto& [k, c] : o.terms_) add_key(k, c);
  return *this;
}

WheelElement& WheelElement::operator-=(const WheelElement& o) {
  if (q_ == nullptr) q_ = o.q_;
  if (o.q_ && q_ != o.q_) throw std::invalid_argument("WheelElement: quiver mismatch");
  for (const auto& [k, c] : o.terms_) add_key(k, -c);
  return *this;
}

WheelElement WheelElement::operator+(const WheelElement& o) const {
  WheelElement out = *this;
  out += o;
  return out;
}

WheelElement WheelElement::operator-(const WheelElement& o) const {
  WheelElement out = *this;
  out -= o;
  return out;
}

WheelElement WheelElement::scaled(const Rational& c) const {
  WheelElement out(q_);
  if (c == 0) return out;
  for (const auto& [k, coeff] : terms_) out.terms_.emplace(k, coeff * c);
  return out;
}

int WheelElement::homogeneous_degree() const {
  int deg = -1;
  for (const auto& [k, c] : terms_) {
    if (deg == -1) deg = k.degree();
    else if (deg != k.degree())
      throw std::invalid_argument("WheelElement: inhomogeneous wheel degree");
  }
  return deg;
}

bool WheelElement::mixed_degree() const {
  int deg = -1;
  for (const auto& [k, c] : terms_) {
    if (deg == -1) deg = k.degree();
    else if (deg != k.degree()) return true;
  }
  return false;
}

Parity term_parity(const Quiver& q, const WheelKey& k) {
  Parity p{0, 0};
  for (const auto& w : k.word) p = combine(p, w.parity(q));
  for (const auto& c : k.cycs) p = combine(p, c.parity(q));
  return p;
}

int term_star_count(const Quiver& q, const WheelKey& k) {
  int n = 0;
  for (const auto& w : k.word) n += w.star_count(q);
  for (const auto& c : k.cycs) n += c.star_count(q);
  return n;
}

int term_diff_count(const Quiver& q, const WheelKey& k) {
  int n = 0;
  for (const auto& w : k.word) n += w.diff_count(q);
  for (const auto& c : k.cycs) n += c.diff_count(q);
  return n;
}

std::string term_str(const Quiver& q, const WheelKey& k, const Rational& c) {
  std::string out = rat_str(c);
  if (!k.word.empty()) {
    Perm sl{std::vector<int>(k.sigma)};
    out += " * " + sl.cycle_string() + "<";
    for (int i = 0; i < k.degree(); ++i) {
      if (i) out += ", ";
      out += k.word[i].str(q);
    }
    out += ">";
  }
  if (!k.cycs.empty()) {
    out += " * ";
    for (const auto& cy : k.cycs) out += cy.str(q);
  }
  return out;
}

std::string WheelElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += "  +  ";
    first = false;
    out += term_str(*q_, k, c);
  }
  return out;
}

WheelElement wheel_product(const WheelElement& u, const WheelElement& v) {
  if (u.quiver() && v.quiver() && u.quiver() != v.quiver())
    throw std::invalid_argument("wheel_product: quiver mismatch");
  const Quiver* q = u.quiver() ? u.quiver() : v.quiver();
  WheelElement out(q);
  for (const auto& [k1, c1] : u.terms()) {
    Parity y1{0, 0};
    for (const auto& cy : k1.cycs) y1 = combine(y1, cy.parity(*q));
    for (const auto& [k2, c2] : v.terms()) {
      const int m = k1.degree(), n = k2.degree();
      std::vector<int> sigma(m + n);
      for (int k = 0; k < m; ++k) sigma[k] = k1.sigma[k];
      for (int k = 0; k < n; ++k) sigma[m + k] = m + k2.sigma[k];
      std::vector<Path> word = k1.word;
      word.insert(word.end(), k2.word.begin(), k2.word.end());
      std::vector<CyclicWord> cycs = k1.cycs;
      cycs.insert(cycs.end(), k2.cycs.begin(), k2.cycs.end());
      // The second word block crosses the first cyclic block.
      Parity w2{0, 0};
      for (const auto& w : k2.word) w2 = combine(w2, w.parity(*q));
      Rational coeff = c1 * c2 * swap_sign(y1, w2);
      out.add_general(coeff, Perm(std::move(sigma)), Perm(m + n), std::move(word),
                      std::move(cycs));
    }
  }
  return out;
}

WheelElement wheel_act(const Perm& alpha, const Perm& beta, const WheelElement& u) {
  WheelElement out(u.quiver());
  for (const auto& [k, c] : u.terms()) {
    if (alpha.degree() != k.degree() || beta.degree() != k.degree())
      throw std::invalid_argument("wheel_act: degree mismatch");
    out.add_general(c, alpha.after(Perm(std::vector<int>(k.sigma))), beta, k.word, k.cycs);
  }
  return out;
}

WheelElement wheel_act_diag(const Perm& sigma, const WheelElement& u) {
  return wheel_act(sigma, sigma, u);
}

namespace {

// mu_{1,1} on an element whose terms all have degree >= 1.
WheelElement contract_11(const WheelElement& u) {
  const Quiver* q = u.quiver();
  WheelElement out(q);
  for (const auto& [k, c] : u.terms()) {
    const int m = k.degree();
    if (m < 1) throw std::invalid_argument("contract: index out of range");
    Perm sigma{std::vector<int>(k.sigma)};
    int t = sigma.inverse()(0);  // slot whose input wire is 1
    if (t == 0) {
      // Output 1 and input 1 close slot 0 into a necklace.
      const Path& w = k.word[0];
      if (!w.closed(*q)) continue;
      auto [cw, s] = cyclic_normalize(*q, w);
      if (s == 0) continue;
      // The closed factor travels past the remaining slots and the existing
      // cyclic block to the end of the letter sequence; the insertion sort in
      // add_general then walks it back to its sorted position.
      Parity rest{0, 0};
      for (int j = 1; j < m; ++j) rest = combine(rest, k.word[j].parity(*q));
      for (const auto& cy : k.cycs) rest = combine(rest, cy.parity(*q));
      Rational coeff = c * s * swap_sign(w.parity(*q), rest);
      std::vector<Path> word(k.word.begin() + 1, k.word.end());
      std::vector<CyclicWord> cycs = k.cycs;
      cycs.push_back(cw);
      out.add_general(coeff, sigma.drop(0, 0), Perm(m - 1), std::move(word),
                      std::move(cycs));
    } else {
      auto h = path_concat(*q, k.word[0], k.word[t]);
      if (!h) continue;
      // Slot 0 travels right past slots 1..t-1 before merging into slot t.
      Parity between{0, 0};
      for (int j = 1; j < t; ++j) between = combine(between, k.word[j].parity(*q));
      Rational coeff = c * swap_sign(k.word[0].parity(*q), between);
      std::vector<Path> word(k.word.begin() + 1, k.word.end());
      word[t - 1] = *h;
      // Composite keeps slot t's output wire and slot 0's input wire.
      std::vector<int> ns(m - 1);
      for (int s2 = 1; s2 < m; ++s2) {
        int lbl = (s2 == t) ? sigma(0) : sigma(s2);
        ns[s2 - 1] = lbl - 1;  // input wire 1 is consumed
      }
      out.add_general(coeff, Perm(std::move(ns)), Perm(m - 1), std::move(word), k.cycs);
    }
  }
  return out;
}

}  // namespace

WheelElement contract(const WheelElement& u, int i, int j) {
  int m = u.homogeneous_degree();
  if (m <= 0) {
    if (m == -1) return WheelElement(u.quiver());
    throw std::invalid_argument("contract: element has wheel degree 0");
  }
  if (i < 1 || i > m || j < 1 || j > m)
    throw std::invalid_argument("contract: index out of range");
  return contract_11(wheel_act(Perm::rotation(m, j), Perm::rotation(m, i), u));
}

bool wheel_equal(const WheelElement& u, const WheelElement& v) {
  return u.terms() == v.terms();
}

}  // namespace wg
