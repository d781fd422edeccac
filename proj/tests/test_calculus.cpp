#include "doctest.h"

#include "support.hpp"
#include "wheelgebra/bracket.hpp"

using namespace wg;
using namespace wgtest;

// Graded axiom conventions. With star parity p, shifted exponents |f|+p make
// one set of formulas cover both regimes: for p = 0 everything is literal,
// for p = 1 they are the standard Gerstenhaber-shifted forms.

namespace {

int sp(const Quiver& q, const Path& p) { return p.parity(q).s; }

DoubleTensor scaled_add(const DoubleTensor& a, const DoubleTensor& b, int s) {
  DoubleTensor out = a;
  out += b.scaled(s);
  return out;
}

// left-substitution triple bracket {{a, {{b,c}}'}} (x) {{b,c}}''
TripleTensor triple_left(const Quiver& q, const Path& a, const Path& b, const Path& c) {
  TripleTensor out(&q);
  auto bc = double_bracket_words(q, b, c);
  for (const auto& [k, co] : bc.terms()) {
    auto ax = double_bracket_words(q, a, k.first);
    for (const auto& [k2, co2] : ax.terms()) out.add(k2.first, k2.second, k.second, co * co2);
  }
  return out;
}

}  // namespace

TEST_CASE("double derivations act by Sweedler splitting") {
  Quiver q = two_loops(0);
  int x = *q.arrow_id("x"), y = *q.arrow_id("y"), xs = q.star_of(x);
  Path px = Path::of(q, {x}), pxs = Path::of(q, {xs});
  Path ev = Path::trivial(0);

  auto d1 = apply_double_derivation(q, pxs, px);
  DoubleTensor e1(&q);
  e1.add(ev, ev, 1);
  CHECK(d1 == e1);

  auto d2 = apply_double_derivation(q, pxs, Path::of(q, {x, x}));
  DoubleTensor e2(&q);
  e2.add(ev, px, 1);
  e2.add(px, ev, 1);
  CHECK(d2 == e2);

  auto d3 = apply_double_derivation(q, pxs, Path::of(q, {y, x, y}));
  DoubleTensor e3(&q);
  e3.add(Path::of(q, {y}), Path::of(q, {y}), 1);
  CHECK(d3 == e3);

  CHECK(apply_double_derivation(q, pxs, Path::of(q, {y})).is_zero());
}

TEST_CASE("double bracket base values") {
  for (int parity : {0, 1}) {
    Quiver q = two_loops(parity);
    int x = *q.arrow_id("x"), y = *q.arrow_id("y"), xs = q.star_of(x);
    Path px = Path::of(q, {x}), py = Path::of(q, {y}), pxs = Path::of(q, {xs});
    CHECK(double_bracket_words(q, px, py).is_zero());
    CHECK(double_bracket_words(q, pxs, pxs).is_zero());
    DoubleTensor e(&q);
    e.add(Path::trivial(0), Path::trivial(0), 1);
    CHECK(double_bracket_words(q, pxs, px) == e);
  }
}

TEST_CASE("double bracket matches the compositional definition on generators") {
  // Independent oracle (even regime): the bracket of two double derivations
  // must agree with the difference of compositions (xi (x) Id) o eta and
  // (Id (x) eta) o xi when both sides are applied to probe paths.
  Quiver q = two_loops(0);
  Rng rng(321);
  int used = 0;
  for (int it = 0; it < 200; ++it) {
    Path xi = random_path(rng, q, irange(rng, 1, 3));
    Path eta = random_path(rng, q, irange(rng, 1, 3));
    if (xi.star_count(q) != 1 || eta.star_count(q) != 1) continue;
    ++used;
    auto br = double_bracket_words(q, xi, eta);
    for (int pt = 0; pt < 6; ++pt) {
      Path p = random_path(rng, q, irange(rng, 0, 4), false);
      TripleTensor lhs(&q);
      {
        auto ep = apply_double_derivation(q, eta, p);
        for (const auto& [k, c] : ep.terms()) {
          auto xu = apply_double_derivation(q, xi, k.first);
          for (const auto& [k2, c2] : xu.terms())
            lhs.add(k2.first, k2.second, k.second, c * c2);  // (xi (x) Id) o eta
          auto xv = apply_double_derivation(q, xi, k.second);
          for (const auto& [k2, c2] : xv.terms())
            lhs.add(k.first, k2.first, k2.second, c * c2);  // (Id (x) xi) o eta
        }
        auto xp = apply_double_derivation(q, xi, p);
        for (const auto& [k, c] : xp.terms()) {
          auto eu = apply_double_derivation(q, eta, k.second);
          for (const auto& [k2, c2] : eu.terms())
            lhs.add(k.first, k2.first, k2.second, -c * c2);  // (Id (x) eta) o xi
          auto ev2 = apply_double_derivation(q, eta, k.first);
          for (const auto& [k2, c2] : ev2.terms())
            lhs.add(k2.first, k2.second, k.second, -c * c2);  // (eta (x) Id) o xi
        }
      }
      // A bracket value w1 (x) w2 acts as a derivation by applying its
      // star-carrying word and inserting the other word between the two
      // Sweedler halves (the inner-bimodule identification).
      TripleTensor rhs(&q);
      for (const auto& [k, c] : br.terms()) {
        const bool star_first = k.first.star_count(q) == 1;
        const Path& der = star_first ? k.first : k.second;
        const Path& mid = star_first ? k.second : k.first;
        auto w = apply_double_derivation(q, der, p);
        for (const auto& [k2, c2] : w.terms()) rhs.add(k2.first, mid, k2.second, c * c2);
      }
      CHECK(lhs == rhs);
    }
  }
  CHECK(used > 30);
}

TEST_CASE("double bracket axioms: Leibniz, skew, module rule") {
  for (int parity : {0, 1}) {
    Quiver q = two_loops(parity);
    Rng rng(42 + parity);
    int checked = 0;
    for (int it = 0; it < 250; ++it) {
      Path xi = random_path(rng, q, irange(rng, 1, 4));
      Path a = random_path(rng, q, irange(rng, 1, 2));
      Path b = random_path(rng, q, irange(rng, 1, 2));
      auto ab = path_concat(q, a, b);
      // Leibniz in the second argument, shifted by the bracket's degree:
      // {{xi, ab}} = {{xi,a}} b + (-1)^{(|xi|+p)|a|} a {{xi,b}}
      if (ab) {
        int s = ((sp(q, xi) ^ parity) & sp(q, a)) ? -1 : 1;
        auto rhs = scaled_add(double_bracket_words(q, xi, a).outer_right(NCPoly::path(q, b)),
                              double_bracket_words(q, xi, b).outer_left(NCPoly::path(q, a)), s);
        CHECK(double_bracket_words(q, xi, *ab) == rhs);
        ++checked;
      }
      // skew: {{f,g}} = -(-1)^{(|f|+p)(|g|+p)} tau {{g,f}}
      {
        int s = ((sp(q, xi) ^ parity) & (sp(q, a) ^ parity)) ? -1 : 1;
        CHECK(double_bracket_words(q, xi, a) ==
              double_bracket_words(q, a, xi).flip_signed().scaled(-s));
      }
      // module rule with an even coefficient: {{xi, c b}} = c{{xi,b}} + {{xi,c}}b
      {
        Path c = random_path(rng, q, irange(rng, 0, 2), false);  // no reversed arrows
        auto cb = path_concat(q, c, b);
        if (cb) {
          auto rhs = double_bracket_words(q, xi, b).outer_left(NCPoly::path(q, c));
          rhs += double_bracket_words(q, xi, c).outer_right(NCPoly::path(q, b));
          CHECK(double_bracket_words(q, xi, *cb) == rhs);
        }
      }
    }
    CHECK(checked > 50);
  }
}

TEST_CASE("double bracket Jacobi identity") {
  // {{a,{{b,c}}}}_L + (-1)^{(|a|+p)(|b|+|c|)} tau {{b,{{c,a}}}}_L
  //                 + (-1)^{(|c|+p)(|a|+|b|)} tau^2 {{c,{{a,b}}}}_L = 0,
  // with tau the signed rotation of the tensor cube.
  for (int parity : {0, 1}) {
    Quiver q = two_loops(parity);
    Rng rng(33 + parity);
    int nontrivial = 0;
    for (int it = 0; it < 150; ++it) {
      Path a = random_path(rng, q, irange(rng, 1, 4));
      Path b = random_path(rng, q, irange(rng, 1, 3));
      Path c = random_path(rng, q, irange(rng, 1, 3));
      int e1 = ((sp(q, a) ^ parity) & (sp(q, b) ^ sp(q, c))) ? -1 : 1;
      int e2 = ((sp(q, c) ^ parity) & (sp(q, a) ^ sp(q, b))) ? -1 : 1;
      TripleTensor t0 = triple_left(q, a, b, c);
      TripleTensor t1 = triple_left(q, b, c, a).rotate_signed();
      TripleTensor t2 = triple_left(q, c, a, b).rotate_signed().rotate_signed();
      TripleTensor total(&q);
      total += t0;
      for (const auto& [k, co] : t1.terms())
        total.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), co * e1);
      for (const auto& [k, co] : t2.terms())
        total.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), co * e2);
      if (!t0.is_zero()) ++nontrivial;
      CHECK(total.is_zero());
    }
    CHECK(nontrivial > 20);
  }
}

TEST_CASE("wheeled bracket generator example") {
  Quiver q = one_loop(1);
  int xs = q.star_of(0);
  auto wb = wheeled_bracket(WheelElement::from_path(q, Path::of(q, {xs})),
                            WheelElement::from_path(q, Path::of(q, {0})));
  WheelElement expd(&q);
  expd.add_general(1, Perm::cycle(2, {0, 1}), Perm(2), {Path::trivial(0), Path::trivial(0)},
                   {});
  CHECK(wb == expd);

  // {[x dx]_cyc, x} = x in F_1 (even regime)
  Quiver qe = one_loop(0);
  auto [cxxs, s] = cyclic_normalize(qe, Path::of(qe, {0, qe.star_of(0)}));
  REQUIRE(s == 1);
  auto wb2 = wheeled_bracket(WheelElement::from_cyclic(qe, cxxs),
                             WheelElement::from_path(qe, Path::of(qe, {0})));
  CHECK(wb2 == WheelElement::from_path(qe, Path::of(qe, {0})));
}

TEST_CASE("wheeled bracket axioms") {
  for (int parity : {0, 1}) {
    Quiver q = two_loops(parity);
    Rng rng(17 + parity);
    for (int it = 0; it < 50; ++it) {
      WheelElement a = random_wheel(rng, q, irange(rng, 0, 2), 2, 1, 1);
      WheelElement b = random_wheel(rng, q, irange(rng, 0, 2), 2, 1, 1);
      WheelElement c = random_wheel(rng, q, irange(rng, 0, 2), 2, 1, 1);
      if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
      const auto& ka = a.terms().begin()->first;
      const auto& kb = b.terms().begin()->first;
      const auto& kc = c.terms().begin()->first;
      int sa = term_parity(q, ka).s, sb = term_parity(q, kb).s, sc = term_parity(q, kc).s;
      int na = ka.degree(), nb = kb.degree(), nc = kc.degree();

      // twisted antisymmetry {a,b} = -(-1)^{(|a|+p)(|b|+p)} (12)^{nb,na} {b,a}
      {
        int e = ((sa ^ parity) & (sb ^ parity)) ? -1 : 1;
        CHECK(wheeled_bracket(a, b) ==
              wheel_act_diag(Perm::block_swap(nb, na), wheeled_bracket(b, a)).scaled(-e));
      }
      // twisted Leibniz {a,bc} = {a,b}c + (-1)^{(|a|+p)|b|} (12)^{nb,na} b{a,c}
      {
        int e = ((sa ^ parity) & sb) ? -1 : 1;
        Perm sw = Perm::block(Perm::cycle(3, {0, 1}), {nb, na, nc});
        auto rhs = wheel_product(wheeled_bracket(a, b), c) +
                   wheel_act_diag(sw, wheel_product(b, wheeled_bracket(a, c))).scaled(e);
        CHECK(wheeled_bracket(a, wheel_product(b, c)) == rhs);
      }
      // compatibility with contractions {mu_{i,j} a, b} = mu_{i,j} {a,b}
      if (na >= 1) {
        int i = static_cast<int>(irange(rng, 1, na)), j = static_cast<int>(irange(rng, 1, na));
        CHECK(wheeled_bracket(contract(a, i, j), b) == contract(wheeled_bracket(a, b), i, j));
      }
      // twisted Jacobi with block rotations
      {
        auto t0 = wheeled_bracket(wheeled_bracket(a, b), c);
        auto t1 = wheeled_bracket(wheeled_bracket(c, a), b);
        auto t2 = wheeled_bracket(wheeled_bracket(b, c), a);
        Perm r1 = Perm::block(Perm(std::vector<int>{2, 0, 1}), {nc, na, nb});
        Perm r2 = Perm::block(Perm(std::vector<int>{1, 2, 0}), {nb, nc, na});
        int f1 = ((sc ^ parity) & (sa ^ sb)) ? -1 : 1;
        int f2 = ((sa ^ parity) & (sb ^ sc)) ? -1 : 1;
        WheelElement total =
            t0 + wheel_act_diag(r1, t1).scaled(f1) + wheel_act_diag(r2, t2).scaled(f2);
        CHECK(total.is_zero());
      }
    }
  }
}

TEST_CASE("necklace bracket examples and Jacobi") {
  Quiver q = two_loops(0);
  int x = *q.arrow_id("x"), xs = q.star_of(x);

  auto [cxx, s1] = cyclic_normalize(q, Path::of(q, {x, xs}));
  CHECK(necklace_bracket(q, cxx, cxx).is_zero());  // antisymmetry on equal arguments

  auto [cx, s2] = cyclic_normalize(q, Path::of(q, {x}));
  CHECK(necklace_bracket(q, cx, cx).is_zero());  // no reversed arrow to pair

  // {[x^2 x*], [x (x*)^2]} = [x^2 (x*)^2] + 2 [x x* x x*]
  auto [c1, t1] = cyclic_normalize(q, Path::of(q, {x, x, xs}));
  auto [c2, t2] = cyclic_normalize(q, Path::of(q, {x, xs, xs}));
  auto [e1, u1] = cyclic_normalize(q, Path::of(q, {x, x, xs, xs}));
  auto [e2, u2] = cyclic_normalize(q, Path::of(q, {x, xs, x, xs}));
  WheelElement expd = WheelElement::from_cyclic(q, e1, u1) +
                      WheelElement::from_cyclic(q, e2, Rational(2) * u2);
  CHECK(necklace_bracket(q, c1, c2) == expd);

  Rng rng(97);
  for (int it = 0; it < 60; ++it) {
    auto mk = [&](int len) {
      Path p = random_closed_path(rng, q, len);
      auto [c, s] = cyclic_normalize(q, p);
      return s == 0 ? CyclicWord::trivial(0) : c;
    };
    CyclicWord a = mk(irange(rng, 1, 4)), b = mk(irange(rng, 1, 4)), c = mk(irange(rng, 1, 4));
    auto brsum = [&](const CyclicWord& v, const WheelElement& rest) {
      WheelElement o(&q);
      for (const auto& [k, co] : rest.terms()) {
        REQUIRE(k.cycs.size() == 1);
        o += necklace_bracket(q, v, k.cycs[0]).scaled(co);
      }
      return o;
    };
    WheelElement acc = brsum(a, necklace_bracket(q, b, c));
    acc += brsum(b, necklace_bracket(q, c, a));
    acc += brsum(c, necklace_bracket(q, a, b));
    CHECK(acc.is_zero());
  }
}

TEST_CASE("necklace cobracket examples") {
  Quiver q = two_loops(0);
  int x = *q.arrow_id("x"), xs = q.star_of(x);
  auto [cx, s1] = cyclic_normalize(q, Path::of(q, {x}));
  CHECK(necklace_cobracket(q, cx).is_zero());  // no matched pair
  auto [cxx, s2] = cyclic_normalize(q, Path::of(q, {x, xs}));
  CHECK(necklace_cobracket(q, cxx).is_zero());  // even wedge square [e]^[e]
}

TEST_CASE("cobracket compatibility with the double bracket") {
  // delta(ab) = delta(a).(b (x) 1) + (a (x) 1).delta(b) + (1 (x) pr){{b,a}}
  Quiver q = two_loops(0);
  Rng rng(55);
  int nontrivial = 0;
  for (int it = 0; it < 300; ++it) {
    Path a = random_path(rng, q, irange(rng, 1, 4));
    Path b = random_path(rng, q, irange(rng, 1, 4));
    auto ab = path_concat(q, a, b);
    if (!ab) continue;
    auto lhs = lifted_cobracket(NCPoly::path(q, *ab));
    HalfOpen rhs(&q);
    auto da = lifted_cobracket(NCPoly::path(q, a));
    for (const auto& [k, c] : da.terms()) {
      auto p = path_concat(q, k.first, b);
      if (p) rhs.add(*p, k.second, c);
    }
    auto db = lifted_cobracket(NCPoly::path(q, b));
    for (const auto& [k, c] : db.terms()) {
      auto p = path_concat(q, a, k.first);
      if (p) rhs.add(*p, k.second, c);
    }
    auto bba = double_bracket_words(q, b, a);
    for (const auto& [k, c] : bba.terms()) {
      if (!k.second.closed(q)) continue;
      auto [cw, s] = cyclic_normalize(q, k.second);
      if (s == 0) continue;
      rhs.add(k.first, cw, c * s);
    }
    if (!lhs.is_zero()) ++nontrivial;
    CHECK(lhs == rhs);
  }
  CHECK(nontrivial > 40);
}

TEST_CASE("necklace bialgebra: co-Jacobi and involutivity") {
  Quiver q = two_loops(0);
  Rng rng(13);
  int nontrivial = 0;
  for (int it = 0; it < 200; ++it) {
    Path p = random_closed_path(rng, q, irange(rng, 1, 5));
    if (!p.closed(q) || p.is_trivial()) continue;
    auto [c, s0] = cyclic_normalize(q, p);
    if (s0 == 0) continue;
    auto d = necklace_cobracket(q, c);
    if (!d.is_zero()) ++nontrivial;

    // involutivity: bracket o cobracket = 0
    WheelElement acc(&q);
    for (const auto& [k, co] : d.terms())
      acc += necklace_bracket(q, k.first, k.second).scaled(co);
    CHECK(acc.is_zero());

    // co-Jacobi: cyclic sum of (delta (x) 1) delta vanishes (tensor form)
    std::map<std::tuple<CyclicWord, CyclicWord, CyclicWord>, Rational> sum;
    auto addt = [&](const CyclicWord& a, const CyclicWord& b, const CyclicWord& cc,
                    const Rational& co) {
      if (co == 0) return;
      for (auto& key :
           {std::make_tuple(a, b, cc), std::make_tuple(cc, a, b), std::make_tuple(b, cc, a)}) {
        auto [it2, ins] = sum.emplace(key, co);
        if (!ins) {
          it2->second += co;
          if (it2->second == 0) sum.erase(it2);
        }
      }
    };
    for (const auto& [k, co] : d.terms())
      for (int dir = 0; dir < 2; ++dir) {
        const CyclicWord& u = dir ? k.second : k.first;
        const CyclicWord& v = dir ? k.first : k.second;
        Rational c2 = dir ? -co : co;
        auto du = necklace_cobracket(q, u);
        for (const auto& [k2, co2] : du.terms()) {
          addt(k2.first, k2.second, v, c2 * co2);
          addt(k2.second, k2.first, v, -c2 * co2);
        }
      }
    CHECK(sum.empty());
  }
  CHECK(nontrivial > 30);
}

TEST_CASE("lifted maps are compatible with the projection") {
  Quiver q = two_loops(0);
  int x = *q.arrow_id("x"), xs = q.star_of(x);
  auto [cx, sx] = cyclic_normalize(q, Path::of(q, {x}));

  // no reversed arrow anywhere
  CHECK(lifted_bracket(NCPoly::path(q, Path::of(q, {x})), cx).is_zero());

  // one contraction against the necklace [x]; the orientation follows the
  // cotangent pairing of the oracle suite
  auto lb = lifted_bracket(NCPoly::path(q, Path::of(q, {x, xs})), cx);
  CHECK(lb == NCPoly::path(q, Path::of(q, {x}), -1));

  Rng rng(5);
  int nontrivial = 0;
  for (int it = 0; it < 250; ++it) {
    Path a = random_closed_path(rng, q, irange(rng, 1, 4));
    Path b = random_closed_path(rng, q, irange(rng, 1, 4));
    if (!a.closed(q) || !b.closed(q) || b.is_trivial()) continue;
    auto [ca, sa] = cyclic_normalize(q, a);
    auto [cb, sb] = cyclic_normalize(q, b);
    if (sa == 0 || sb == 0) continue;

    // pr(lifted_bracket(a,[b])) = necklace_bracket([a],[b]) for closed a
    WheelElement pl(&q);
    auto lba = lifted_bracket(NCPoly::path(q, a), cb);
    for (const auto& [p, c] : lba.terms()) {
      if (!p.closed(q)) continue;
      auto [cw, s] = cyclic_normalize(q, p);
      if (s == 0) continue;
      pl += WheelElement::from_cyclic(q, cw, c * s);
    }
    auto nb = necklace_bracket(q, ca, cb).scaled(sa);
    if (!pl.is_zero()) ++nontrivial;
    CHECK(pl == nb);

    // (pr (x) 1)(lifted_cobracket(a)) = necklace_cobracket([a])
    WedgePairs w1(&q);
    auto dla = lifted_cobracket(NCPoly::path(q, a));
    for (const auto& [k, co] : dla.terms()) {
      if (!k.first.closed(q)) continue;
      auto [cw, s] = cyclic_normalize(q, k.first);
      if (s == 0) continue;
      w1.add(cw, k.second, co * s);
    }
    WedgePairs w2(&q);
    auto dca = necklace_cobracket(q, ca);
    for (const auto& [k, co] : dca.terms())
      w2.add(k.first, k.second, co * sa);
    CHECK(w1 == w2);
  }
  CHECK(nontrivial > 25);
}
