#include "wheelgebra/twisted.hpp"

#include <stdexcept>

#include "wheelgebra/linalg.hpp"

namespace wg {

TwistedOp TwistedOp::identity(const Quiver& q) {
  TwistedOp op(&q);
  op.add(Key{}, 1);
  return op;
}

TwistedOp TwistedOp::multiplier(const Quiver& q, const Path& word) {
  TwistedOp op(&q);
  op.add(Key{word.letters(), {}}, 1);
  return op;
}

TwistedOp TwistedOp::derivation_unit(const Quiver& q, int a, int b) {
  TwistedOp op(&q);
  op.add(Key{{}, {{a, b}}}, 1);
  return op;
}

TwistedOp TwistedOp::derivation(const Quiver& q, const RatMatrix& phi) {
  TwistedOp op(&q);
  for (int a = 0; a < q.num_arrows(); ++a)
    for (int b = 0; b < q.num_arrows(); ++b)
      if (phi[a][b] != 0) op.add(Key{{}, {{a, b}}}, phi[a][b]);
  return op;
}

void TwistedOp::add(Key k, const Rational& c) {
  if (c == 0) return;
  // normal order: sort the unit list, one adjacent swap at a time, paying the
  // commutator correction [E_ab, E_cd] = d_bc E_ad - d_da E_cb
  for (size_t i = 0; i + 1 < k.units.size(); ++i) {
    if (k.units[i] <= k.units[i + 1]) continue;
    auto [a, b] = k.units[i];
    auto [cc, d] = k.units[i + 1];
    Key swapped = k;
    std::swap(swapped.units[i], swapped.units[i + 1]);
    add(std::move(swapped), c);
    if (b == cc) {
      Key corr = k;
      corr.units.erase(corr.units.begin() + i + 1);
      corr.units[i] = {a, d};
      add(std::move(corr), c);
    }
    if (d == a) {
      Key corr = k;
      corr.units.erase(corr.units.begin() + i + 1);
      corr.units[i] = {cc, b};
      add(std::move(corr), -c);
    }
    return;
  }
  auto [it, inserted] = terms_.emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TwistedOp& TwistedOp::operator+=(const TwistedOp& o) {
  if (q_ == nullptr) q_ = o.q_;
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TwistedOp& TwistedOp::operator-=(const TwistedOp& o) {
  if (q_ == nullptr) q_ = o.q_;
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TwistedOp TwistedOp::scaled(const Rational& c) const {
  TwistedOp out(q_);
  if (c == 0) return out;
  for (const auto& [k, coeff] : terms_) out.terms_.emplace(k, coeff * c);
  return out;
}

int TwistedOp::order() const {
  int n = 0;
  for (const auto& [k, c] : terms_) n = std::max(n, static_cast<int>(k.units.size()));
  return n;
}

int TwistedOp::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int len = static_cast<int>(k.prefix.size());
    if (d == -1) d = len;
    else if (d != len)
      throw std::invalid_argument("TwistedOp: mixed degree");
  }
  return d < 0 ? 0 : d;
}

namespace {

// single derivation unit E_{ab}: replace one letter b by a, summed over sites
NCPoly unit_apply(const Quiver& q, int a, int b, const NCPoly& f) {
  NCPoly out(&q);
  for (const auto& [p, c] : f.terms())
    for (int pos = 0; pos < p.length(); ++pos) {
      if (p.letter(pos) != b) continue;
      std::vector<int> nl = p.letters();
      nl[pos] = a;
      out.add(Path::of(q, nl), c);
    }
  return out;
}

}  // namespace

NCPoly TwistedOp::apply(const NCPoly& f) const {
  // the unit list is a composition: the last unit acts first
  const Quiver& q = *q_;
  NCPoly out(&q);
  for (const auto& [k, c] : terms_) {
    NCPoly cur = f;
    for (auto it = k.units.rbegin(); it != k.units.rend(); ++it)
      cur = unit_apply(q, it->first, it->second, cur);
    for (const auto& [p, d] : cur.terms()) {
      std::vector<int> letters = k.prefix;
      letters.insert(letters.end(), p.letters().begin(), p.letters().end());
      out.add(letters.empty() ? Path::trivial(0) : Path::of(q, letters), c * d);
    }
  }
  return out;
}

TwistedOp TwistedOp::compose(const TwistedOp& o) const {
  // normal ordering: push each unit (innermost first) through the other
  // operator's prefix, either deriving it or passing below it
  const Quiver& q = *q_;
  TwistedOp out(&q);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      struct State {
        Rational coeff;
        std::vector<int> word;
        std::vector<std::pair<int, int>> passed;
      };
      std::vector<State> states{{c1 * c2, k2.prefix, {}}};
      for (auto it = k1.units.rbegin(); it != k1.units.rend(); ++it) {
        auto [a, b] = *it;
        std::vector<State> next;
        for (auto& st : states) {
          State ps = st;
          ps.passed.insert(ps.passed.begin(), {a, b});
          next.push_back(std::move(ps));
          for (size_t pos = 0; pos < st.word.size(); ++pos) {
            if (st.word[pos] != b) continue;
            State hs = st;
            hs.word[pos] = a;
            next.push_back(std::move(hs));
          }
        }
        states = std::move(next);
      }
      for (auto& st : states) {
        Key nk;
        nk.prefix = k1.prefix;
        nk.prefix.insert(nk.prefix.end(), st.word.begin(), st.word.end());
        nk.units = st.passed;
        nk.units.insert(nk.units.end(), k2.units.begin(), k2.units.end());
        out.add(std::move(nk), st.coeff);
      }
    }
  return out;
}

TwistedOp TwistedOp::commutator(const TwistedOp& o) const {
  TwistedOp ab = compose(o);
  TwistedOp ba = o.compose(*this);
  // block swap of the two prefixes in the reversed composite
  int da = degree(), db = o.degree();
  TwistedOp out = ab;
  for (const auto& [k, c] : ba.terms()) {
    Key nk = k;
    if (static_cast<int>(k.prefix.size()) != da + db)
      throw std::logic_error("TwistedOp: unexpected composite degree");
    std::vector<int> sw(k.prefix.begin() + db, k.prefix.end());
    sw.insert(sw.end(), k.prefix.begin(), k.prefix.begin() + db);
    nk.prefix = std::move(sw);
    out.add(std::move(nk), -c);
  }
  return out;
}

std::string TwistedOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += rat_str(c);
    if (!k.prefix.empty()) {
      out += " ";
      for (size_t i = 0; i < k.prefix.size(); ++i) {
        if (i) out += " ";
        out += q_->arrow(k.prefix[i]).name;
      }
    }
    for (auto& [a, b] : k.units)
      out += " D(" + q_->arrow(a).name + "<-" + q_->arrow(b).name + ")";
  }
  return out;
}

namespace {

void matrix_units_apply(const Quiver& q, const std::vector<RatMatrix>& ds, size_t ui,
                        const std::vector<int>& word, size_t from, std::vector<int>& acc,
                        const Rational& coeff, NCPoly& out) {
  if (ui == ds.size()) {
    std::vector<int> letters = acc;
    letters.insert(letters.end(), word.begin() + from, word.end());
    out.add(letters.empty() ? Path::trivial(0) : Path::of(q, letters), coeff);
    return;
  }
  for (size_t pos = from; pos < word.size(); ++pos) {
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Rational& entry = ds[ui][a][word[pos]];
      if (entry == 0) continue;
      size_t base = acc.size();
      acc.insert(acc.end(), word.begin() + from, word.begin() + pos);
      acc.push_back(a);
      matrix_units_apply(q, ds, ui + 1, word, pos + 1, acc, coeff * entry, out);
      acc.resize(base);
    }
  }
}

}  // namespace

NCPoly ordered_derivations_apply(const Quiver& q, const std::vector<RatMatrix>& ds,
                                 const Path& word) {
  NCPoly out(&q);
  std::vector<int> acc;
  matrix_units_apply(q, ds, 0, word.letters(), 0, acc, 1, out);
  return out;
}

}  // namespace wg
