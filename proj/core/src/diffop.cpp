#include "wheelgebra/diffop.hpp"

#include <stdexcept>

namespace wg {

namespace {

// Current position of every wire label while contractions consume them.
struct Tracker {
  std::vector<int> out, in;  // original label (1-based) -> current, 0 = gone
  explicit Tracker(int n) : out(n + 1), in(n + 1) {
    for (int i = 0; i <= n; ++i) out[i] = in[i] = i;
  }
  void contracted(int cur_out, int cur_in) {
    for (auto& v : out) {
      if (v == cur_out) v = 0;
      else if (v > cur_out) --v;
    }
    for (auto& v : in) {
      if (v == cur_in) v = 0;
      else if (v > cur_in) --v;
    }
  }
};

Path bare_star(const Quiver& q, int e) { return Path::of(q, {q.star_of(e)}); }

}  // namespace

WheeledDiffOp WheeledDiffOp::identity(const Quiver& q) {
  WheeledDiffOp op(&q);
  op.add(Key{WheelKey{}, {}, {}}, 1);
  return op;
}

WheeledDiffOp WheeledDiffOp::multiplier(const WheelElement& m) {
  WheeledDiffOp op(m.quiver());
  for (const auto& [k, c] : m.terms()) op.add(Key{k, {}, {}}, c);
  return op;
}

WheeledDiffOp WheeledDiffOp::annihilator(const Quiver& q, const Path& xi) {
  if (xi.star_count(q) != 1)
    throw std::invalid_argument("annihilator: need exactly one reversed arrow");
  int si = -1;
  for (int i = 0; i < xi.length(); ++i)
    if (q.arrow(xi.letter(i)).stratum == Stratum::Star) si = i;
  int e = q.arrow(xi.letter(si)).base;
  WheeledDiffOp op(&q);
  if (xi.length() == 1) {
    // a bare reversed arrow leaves its created slot free
    Key k;
    k.annih = {e};
    k.ports = {Port{0, 0}};
    op.add(k, 1);
    return op;
  }
  Path alpha = xi.sub(q, 0, si), beta = xi.sub(q, si + 1, xi.length());
  Key k;
  k.sym.word = {beta, alpha};
  k.sym.sigma = {1, 0};
  k.annih = {e};
  k.ports = {Port{2, 2}};
  op.add(k, 1);
  return op;
}

WheeledDiffOp WheeledDiffOp::necklace_op(const Quiver& q, const Path& a, int e) {
  WheeledDiffOp op(&q);
  Key k;
  k.sym.word = {a};
  k.sym.sigma = {0};
  k.annih = {e};
  k.ports = {Port{1, 1}};
  op.add(k, 1);
  return op;
}

WheeledDiffOp WheeledDiffOp::necklace_op2(const Quiver& q, int e, int f) {
  WheeledDiffOp op(&q);
  // two fresh slots route one created slot into the other
  int v0 = q.arrow(f).tail, v0b = q.arrow(e).head;
  int v1 = q.arrow(e).tail, v1b = q.arrow(f).head;
  if (v0 != v0b || v1 != v1b) return op;  // not composable into one cycle
  Key k;
  k.sym.word = {Path::trivial(v0), Path::trivial(v1)};
  k.sym.sigma = {0, 1};
  k.annih = {e, f};
  k.ports = {Port{1, 2}, Port{2, 1}};
  op.add(k, 1);
  return op;
}

void WheeledDiffOp::add(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WheeledDiffOp& WheeledDiffOp::operator+=(const WheeledDiffOp& o) {
  if (q_ == nullptr) q_ = o.q_;
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

WheeledDiffOp& WheeledDiffOp::operator-=(const WheeledDiffOp& o) {
  if (q_ == nullptr) q_ = o.q_;
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

WheeledDiffOp WheeledDiffOp::scaled(const Rational& c) const {
  WheeledDiffOp out(q_);
  if (c == 0) return out;
  for (const auto& [k, coeff] : terms_) out.terms_.emplace(k, coeff * c);
  return out;
}

int WheeledDiffOp::order() const {
  int n = 0;
  for (const auto& [k, c] : terms_) n = std::max(n, static_cast<int>(k.annih.size()));
  return n;
}

WheelElement WheeledDiffOp::apply(const WheelElement& u) const {
  const Quiver& q = *q_;
  WheelElement out(&q);
  for (const auto& [k, c] : terms_) {
    const int n = static_cast<int>(k.annih.size());
    const int ms = k.sym.degree();
    // run the annihilators; slots stack at the back, so the slot created by
    // annih[j] ends up at distance j from the end
    WheelElement chain = u;
    for (int j = n - 1; j >= 0; --j) chain = theta_apply(q, bare_star(q, k.annih[j]), chain);
    for (const auto& [kc, cc] : chain.terms()) {
      auto [combined, csign] = concat_raw(q, k.sym, kc);
      WheelElement work(&q);
      work.add_general(c * cc * csign, Perm(std::vector<int>(combined.sigma)),
                       Perm(combined.degree()), combined.word, combined.cycs);
      Tracker t(ms + kc.degree());
      const int total = ms + kc.degree();
      for (int j = 0; j < n && !work.is_zero(); ++j) {
        int vlabel = total - j;  // fresh wire pair of annih[j]
        if (k.ports[j].out == 0 && k.ports[j].in == 0) continue;  // free slot
        int vo = t.out[vlabel];
        int pi = t.in[k.ports[j].in];
        work = contract(work, vo, pi);
        t.contracted(vo, pi);
        if (work.is_zero()) break;
        int po = t.out[k.ports[j].out];
        int vi = t.in[vlabel];
        work = contract(work, po, vi);
        t.contracted(po, vi);
      }
      out += work;
    }
  }
  return out;
}

WheeledDiffOp WheeledDiffOp::compose(const WheeledDiffOp& o) const {
  const Quiver& q = *q_;
  WheeledDiffOp out(&q);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      const int n1 = static_cast<int>(k1.annih.size());
      struct State {
        Rational coeff;
        WheelKey wsym;
        std::vector<Port> p2;           // k2 ports, tracked
        std::vector<char> passed;       // per k1-annihilator index
        std::vector<Port> hit_virtual;  // per k1 index: fresh wire pair, tracked
      };
      std::vector<State> states{{c1 * c2, k2.sym, k2.ports,
                                 std::vector<char>(n1, 0),
                                 std::vector<Port>(n1, Port{0, 0})}};
      for (int j = n1 - 1; j >= 0; --j) {
        int e = k1.annih[j];
        std::vector<State> next;
        for (auto& st : states) {
          // pass: the annihilator moves below the symbol; with slots stacking
          // at the back this is a plain commutation
          {
            State ps = st;
            ps.passed[j] = 1;
            next.push_back(std::move(ps));
          }
          // hit: the annihilator lands in the symbol itself; the created slot
          // is appended, so existing wire labels stay put
          WheelElement one(&q);
          one.add_key(st.wsym, 1);
          WheelElement hits = theta_apply(q, bare_star(q, e), one);
          for (const auto& [hk, hc] : hits.terms()) {
            State hs = st;
            hs.coeff *= hc;
            hs.wsym = hk;
            int fresh = hk.degree();
            hs.hit_virtual[j] = Port{fresh, fresh};
            next.push_back(std::move(hs));
          }
        }
        states = std::move(next);
      }
      const int m1 = k1.sym.degree();
      for (auto& st : states) {
        auto [sym0, csign] = concat_raw(q, k1.sym, st.wsym);
        WheelElement work(&q);
        work.add_general(st.coeff * csign, Perm(std::vector<int>(sym0.sigma)),
                         Perm(sym0.degree()), sym0.word, sym0.cycs);
        Tracker t(m1 + st.wsym.degree());
        auto shift = [&](Port p) { return Port{p.out ? p.out + m1 : 0, p.in ? p.in + m1 : 0}; };
        bool dead = false;
        for (int j = 0; j < n1 && !dead; ++j) {
          if (st.passed[j]) continue;
          Port p = k1.ports[j];
          if (p.out == 0 && p.in == 0) continue;  // free slot stays in the symbol
          Port v = shift(st.hit_virtual[j]);
          int vo = t.out[v.out], pi = t.in[p.in];
          work = contract(work, vo, pi);
          t.contracted(vo, pi);
          if (work.is_zero()) {
            dead = true;
            break;
          }
          int po = t.out[p.out], vi = t.in[v.in];
          work = contract(work, po, vi);
          t.contracted(po, vi);
          if (work.is_zero()) dead = true;
        }
        if (dead) continue;
        // assemble annihilator and port lists: surviving first-factor entries
        // in their original order, then the second factor's
        std::vector<int> annih;
        std::vector<Port> ports;
        for (int j = 0; j < n1; ++j) {
          if (!st.passed[j]) continue;
          annih.push_back(k1.annih[j]);
          Port p = k1.ports[j];
          ports.push_back(Port{p.out ? t.out[p.out] : 0, p.in ? t.in[p.in] : 0});
        }
        for (size_t j = 0; j < st.p2.size(); ++j) {
          annih.push_back(k2.annih[j]);
          Port p = shift(st.p2[j]);
          ports.push_back(Port{p.out ? t.out[p.out] : 0, p.in ? t.in[p.in] : 0});
        }
        for (const auto& [wk, wc] : work.terms()) out.add(Key{wk, annih, ports}, wc);
      }
    }
  return out;
}

std::string WheeledDiffOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += "  +  ";
    first = false;
    out += term_str(*q_, k.sym, c);
    for (size_t j = 0; j < k.annih.size(); ++j)
      out += " dd(" + q_->arrow(q_->star_of(k.annih[j])).name + ")@(" +
             std::to_string(k.ports[j].out) + "," + std::to_string(k.ports[j].in) + ")";
  }
  return out;
}

WheelElement principal_symbol(const Quiver& q, const OpFn& D, Parity op_parity,
                              int op_wheel_degree, const std::vector<WheelElement>& args) {
  OpFn cur = D;
  Parity par = op_parity;
  int wdeg = op_wheel_degree;
  for (const auto& b : args) {
    if (b.is_zero()) return WheelElement(&q);
    Parity bp = term_parity(q, b.terms().begin()->first);
    int bdeg = b.homogeneous_degree();
    if (bdeg < 0) bdeg = 0;
    OpFn prev = cur;
    Parity prevpar = par;
    int prevdeg = wdeg;
    WheelElement bcopy = b;
    cur = [&q, prev, prevpar, prevdeg, bcopy, bdeg](const WheelElement& u) {
      int s = swap_sign(term_parity(q, bcopy.terms().begin()->first), prevpar);
      WheelElement rhs = wheel_product(bcopy, prev(u));
      if (!rhs.is_zero() && prevdeg != 0) {
        int total = rhs.homogeneous_degree();
        // move the operator's output block back past the argument block
        Perm sw = Perm::block(Perm::cycle(3, {0, 1}),
                              {bdeg, prevdeg, total - bdeg - prevdeg});
        rhs = wheel_act_diag(sw, rhs);
      }
      return prev(wheel_product(bcopy, u)) - rhs.scaled(s);
    };
    par = Parity{static_cast<uint8_t>(par.s ^ bp.s), static_cast<uint8_t>(par.d ^ bp.d)};
    wdeg += bdeg;
  }
  return cur(WheelElement::unit(q));
}

WheeledDiffOp weil_element(const Quiver& q, const CyclicWord& quad) {
  if (quad.length() != 2)
    throw std::invalid_argument("weil_element: need a quadratic cyclic word");
  int l1 = quad.letters()[0], l2 = quad.letters()[1];
  auto st = [&](int l) { return q.arrow(l).stratum; };
  if (st(l1) == Stratum::Base && st(l2) == Stratum::Base)
    return WheeledDiffOp::multiplier(WheelElement::from_cyclic(q, quad));

  if (st(l1) == Stratum::Star && st(l2) == Stratum::Star)
    return WheeledDiffOp::necklace_op2(q, q.arrow(l1).base, q.arrow(l2).base);

  // mixed case: [a o d_f] with the symmetrization correction for a = f
  int base_letter = st(l1) == Stratum::Base ? l1 : l2;
  int star_letter = st(l1) == Stratum::Star ? l1 : l2;
  int f = q.arrow(star_letter).base;
  WheeledDiffOp op = WheeledDiffOp::necklace_op(q, Path::of(q, {base_letter}), f);
  if (base_letter == f) {
    // (1/2)([e o d_e] + [d_e o e]) = [e o d_e] + (1/2) [e_tail][e_head]
    auto [ct, s1] = cyclic_normalize(q, Path::trivial(q.arrow(f).tail));
    auto [ch, s2] = cyclic_normalize(q, Path::trivial(q.arrow(f).head));
    WheelElement corr(&q);
    corr.add_general(Rational(1, 2), Perm(0), Perm(0), {}, {ct, ch});
    op += WheeledDiffOp::multiplier(corr);
  }
  return op;
}

WheelElement apply_op(const WheeledDiffOp& D, const WheelElement& u) { return D.apply(u); }

}  // namespace wg
