#include "wheelgebra/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace wg {

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  auto a = factors.begin(), b = o.factors.begin();
  while (a != factors.end() || b != o.factors.end()) {
    if (b == o.factors.end() || (a != factors.end() && a->first < b->first))
      out.factors.push_back(*a++);
    else if (a == factors.end() || b->first < a->first)
      out.factors.push_back(*b++);
    else {
      out.factors.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : factors) d += e;
  return d;
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term(Monomial::one(), {}, c);
  return p;
}

Poly Poly::variable(int v) {
  Poly p;
  p.add_term(Monomial::var(v), {}, 1);
  return p;
}

Poly Poly::odd_variable(int v) {
  Poly p;
  p.add_term(Monomial::one(), {v}, 1);
  return p;
}

bool Poly::has_odd() const {
  for (const auto& [k, c] : terms_)
    if (!k.odd.empty()) return true;
  return false;
}

void Poly::add_term(const Monomial& m, const std::vector<int>& odd, const Rational& c) {
  if (c == 0) return;
  Key key{m, odd};
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.mono, k.odd, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.mono, k.odd, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  out += o;
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  out -= o;
  return out;
}

namespace {

// merge sorted odd words; zero when a variable repeats; sign counts crossings
int merge_odd(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int sign = 1;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      // b[j] moves left past the remaining a-letters
      if ((a.size() - i) & 1) sign = -sign;
      out.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return sign;
}

}  // namespace

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  std::vector<int> odd;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      int s = merge_odd(ka.odd, kb.odd, odd);
      if (s == 0) continue;
      out.add_term(ka.mono.times(kb.mono), odd, ca * cb * s);
    }
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out;
  if (c == 0) return out;
  for (const auto& [k, coeff] : terms_) out.terms_.emplace(k, coeff * c);
  return out;
}

Poly Poly::derivative(int var) const {
  Poly out;
  for (const auto& [k, c] : terms_) {
    for (size_t i = 0; i < k.mono.factors.size(); ++i) {
      if (k.mono.factors[i].first != var) continue;
      Monomial m = k.mono;
      Rational coeff = c * m.factors[i].second;
      if (--m.factors[i].second == 0) m.factors.erase(m.factors.begin() + i);
      out.add_term(m, k.odd, coeff);
      break;
    }
  }
  return out;
}

Poly Poly::odd_derivative(int var) const {
  // left derivative: the sign counts the odd letters before the removed one
  Poly out;
  for (const auto& [k, c] : terms_) {
    auto it = std::find(k.odd.begin(), k.odd.end(), var);
    if (it == k.odd.end()) continue;
    int idx = static_cast<int>(it - k.odd.begin());
    std::vector<int> odd = k.odd;
    odd.erase(odd.begin() + idx);
    out.add_term(k.mono, odd, (idx & 1) ? -c : c);
  }
  return out;
}

Rational Poly::eval(const std::map<int, Rational>& point) const {
  Rational out = 0;
  for (const auto& [k, c] : terms_) {
    if (!k.odd.empty()) throw std::invalid_argument("Poly::eval: odd variables present");
    Rational t = c;
    for (auto& [v, e] : k.mono.factors) {
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("Poly::eval: missing variable");
      for (int i = 0; i < e; ++i) t *= it->second;
    }
    out += t;
  }
  return out;
}

std::string Poly::str(const std::vector<std::string>& names,
                      const std::vector<std::string>& odd_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += rat_str(c);
    for (auto& [v, e] : k.mono.factors) {
      out += " " + names[v];
      if (e > 1) out += "^" + std::to_string(e);
    }
    for (int v : k.odd) out += " " + odd_names[v];
  }
  return out;
}

}  // namespace wg
