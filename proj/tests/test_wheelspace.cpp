#include "doctest.h"

#include "support.hpp"

using namespace wg;
using namespace wgtest;

namespace {

// Oracle for the canonical form: the induced-module relation identifies
// (sl d, sr d) (x) X with (sl, sr) (x) tau_d(X). Enumerating the full orbit of
// a raw tuple must land on a single canonical term.
void orbit_insert_all(WheelElement& into, Rational coeff, const Perm& sl, const Perm& sr,
                      const std::vector<Path>& word, const Quiver& q) {
  const int m = static_cast<int>(word.size());
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::vector<Parity> ps(m);
  for (int i = 0; i < m; ++i) ps[i] = word[i].parity(q);
  // iterate over all permutations delta of m points
  std::vector<int> perm(idx);
  do {
    Perm d{std::vector<int>(perm)};
    Perm dinv = d.inverse();
    // (sl d, sr d) (x) tau_{d^{-1}}(X) equals (sl, sr) (x) X
    std::vector<Path> w2(m);
    for (int i = 0; i < m; ++i) w2[i] = word[d(i)];
    int sg = koszul_sign(dinv, ps);
    WheelElement tmp(&q);
    tmp.add_general(coeff * sg, sl * d, sr * d, w2, {});
    into += tmp;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

TEST_CASE("canonical form agrees on the whole induced-module orbit") {
  for (int parity : {0, 1}) {
    Quiver q = two_loops(parity);
    Rng rng(101 + parity);
    for (int it = 0; it < 40; ++it) {
      int m = static_cast<int>(irange(rng, 1, 3));
      std::vector<Path> word;
      for (int k = 0; k < m; ++k) word.push_back(random_path(rng, q, irange(rng, 0, 2)));
      Perm sl = random_perm(rng, m), sr = random_perm(rng, m);
      WheelElement direct(&q);
      direct.add_general(1, sl, sr, word, {});
      // summing the whole orbit must give m! copies of the canonical term
      WheelElement orbit(&q);
      orbit_insert_all(orbit, 1, sl, sr, word, q);
      long fact = 1;
      for (int k = 2; k <= m; ++k) fact *= k;
      CHECK(orbit == direct.scaled(fact));
    }
  }
}

TEST_CASE("normalization examples") {
  Quiver q = two_loops(0);
  Path x = Path::of(q, {*q.arrow_id("x")});
  Path y = Path::of(q, {*q.arrow_id("y")});

  WheelElement a(&q);
  a.add_general(1, Perm(2), Perm(2), {x, y}, {});
  CHECK(a.terms().begin()->first.sigma == std::vector<int>{0, 1});

  // sigma_R = (12) folds into sigma_L = (12) with the word permuted.
  WheelElement b(&q);
  b.add_general(1, Perm(2), Perm::cycle(2, {0, 1}), {x, y}, {});
  const auto& kb = b.terms().begin()->first;
  CHECK(kb.sigma == std::vector<int>{1, 0});
  CHECK(kb.word == std::vector<Path>{y, x});

  // odd cyclic class squared is zero
  Quiver qo = one_loop(1);
  auto [cx, sx] = cyclic_normalize(qo, Path::of(qo, {0, qo.star_of(0)}));
  REQUIRE(sx == 1);
  WheelElement c(&qo);
  c.add_general(1, Perm(0), Perm(0), {}, {cx, cx});
  CHECK(c.is_zero());
}

TEST_CASE("product: unit, twisted commutativity, associativity") {
  for (int parity : {0, 1}) {
    Quiver q = two_loops(parity);
    Rng rng(202 + parity);
    for (int it = 0; it < 30; ++it) {
      WheelElement u = random_wheel(rng, q, irange(rng, 0, 2), 2, 2);
      WheelElement v = random_wheel(rng, q, irange(rng, 0, 2), 2, 2);
      WheelElement w = random_wheel(rng, q, irange(rng, 0, 2), 2, 2);
      CHECK(wheel_product(u, WheelElement::unit(q)) == u);
      CHECK(wheel_product(WheelElement::unit(q), u) == u);
      CHECK(wheel_product(wheel_product(u, v), w) == wheel_product(u, wheel_product(v, w)));
      // twisted commutativity, checked per parity-homogeneous term pair:
      // mu(v (x) u) = s(|u|,|v|) (12)^{m,n} mu(u (x) v)
      for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms()) {
          WheelElement tu(&q), tv(&q);
          tu.add_key(ku, cu);
          tv.add_key(kv, cv);
          int m = ku.degree(), n = kv.degree();
          int s = swap_sign(term_parity(q, ku), term_parity(q, kv));
          WheelElement lhs =
              wheel_act_diag(Perm::block_swap(m, n), wheel_product(tu, tv)).scaled(s);
          CHECK(lhs == wheel_product(tv, tu));
        }
    }
  }
}

TEST_CASE("action composition law") {
  Quiver q = two_loops(1);
  Rng rng(303);
  for (int it = 0; it < 50; ++it) {
    int m = static_cast<int>(irange(rng, 1, 4));
    WheelElement u = random_wheel(rng, q, m, 2, 2);
    Perm a1 = random_perm(rng, m), b1 = random_perm(rng, m);
    Perm a2 = random_perm(rng, m), b2 = random_perm(rng, m);
    CHECK(wheel_act(a1, b1, wheel_act(a2, b2, u)) == wheel_act(a1 * a2, b1 * b2, u));
    CHECK(wheel_act(Perm(m), Perm(m), u) == u);
  }
}

TEST_CASE("contraction examples") {
  Quiver q = two_loops(0);
  Path x = Path::of(q, {*q.arrow_id("x")});
  Path y = Path::of(q, {*q.arrow_id("y")});
  WheelElement xy = wheel_product(WheelElement::from_path(q, x), WheelElement::from_path(q, y));

  // joining output 1 to input 2 multiplies the paths
  auto c12 = contract(xy, 1, 2);
  WheelElement exp1 = WheelElement::from_path(q, Path::of(q, {*q.arrow_id("x"), *q.arrow_id("y")}));
  CHECK(c12 == exp1);

  // joining output 1 to input 1 closes the first factor into a necklace
  auto c11 = contract(xy, 1, 1);
  auto [cx, sx] = cyclic_normalize(q, x);
  WheelElement exp2(&q);
  exp2.add_general(sx, Perm(1), Perm(1), {y}, {cx});
  CHECK(c11 == exp2);

  // degree one: the full closure lands in F_0
  auto c0 = contract(WheelElement::from_path(q, x), 1, 1);
  CHECK(c0 == WheelElement::from_cyclic(q, cx));

  // open factors cannot close up
  Quiver a2q = round_trip(0);
  Path pa = Path::of(a2q, {*a2q.arrow_id("a")});
  CHECK(contract(WheelElement::from_path(a2q, pa), 1, 1).is_zero());
}

TEST_CASE("contraction associativity law") {
  for (int parity : {0, 1}) {
    Quiver q = two_loops(parity);
    Rng rng(404 + parity);
    for (int it = 0; it < 8; ++it) {
      int m = static_cast<int>(irange(rng, 2, 4));
      WheelElement u = random_wheel(rng, q, m, 2, 2);
      for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j)
          for (int k = 1; k <= m; ++k)
            for (int l = 1; l <= m; ++l) {
              WheelElement lhs = contract(contract(u, k, l), i, j);
              int ip, kp, jp, lp;
              if (i < k) { ip = i; kp = k - 1; } else { ip = i + 1; kp = k; }
              if (j < l) { jp = j; lp = l - 1; } else { jp = j + 1; lp = l; }
              WheelElement rhs = contract(contract(u, ip, jp), kp, lp);
              CHECK(lhs == rhs);
            }
    }
  }
}

namespace {
// order-preserving embedding of S_{m-1} into S_m fixing `fixed` (0-based)
Perm embed_fixing(const Perm& s, int fixed) {
  int m = s.degree() + 1;
  std::vector<int> comp;
  for (int i = 0; i < m; ++i)
    if (i != fixed) comp.push_back(i);
  std::vector<int> img(m);
  img[fixed] = fixed;
  for (int i = 0; i < s.degree(); ++i) img[comp[i]] = comp[s(i)];
  return Perm(img);
}
}  // namespace

TEST_CASE("contraction equivariance") {
  for (int parity : {0, 1}) {
    Quiver q = two_loops(parity);
    Rng rng(505 + parity);
    for (int it = 0; it < 40; ++it) {
      int m = static_cast<int>(irange(rng, 2, 4));
      WheelElement u = random_wheel(rng, q, m, 2, 2);
      int i = static_cast<int>(irange(rng, 1, m)), j = static_cast<int>(irange(rng, 1, m));
      Perm a = random_perm(rng, m - 1), b = random_perm(rng, m - 1);
      Perm ahat = embed_fixing(a, j - 1), bhat = embed_fixing(b, i - 1);
      CHECK(contract(wheel_act(ahat, bhat, u), i, j) ==
            wheel_act(a, b, contract(u, i, j)));
    }
  }
}

TEST_CASE("contraction is compatible with the product") {
  for (int parity : {0, 1}) {
    Quiver q = two_loops(parity);
    Rng rng(606 + parity);
    for (int it = 0; it < 30; ++it) {
      int m = static_cast<int>(irange(rng, 1, 3));
      WheelElement u = random_wheel(rng, q, m, 2, 2);
      WheelElement v = random_wheel(rng, q, irange(rng, 0, 2), 2, 2);
      int i = static_cast<int>(irange(rng, 1, m)), j = static_cast<int>(irange(rng, 1, m));
      CHECK(contract(wheel_product(u, v), i, j) == wheel_product(contract(u, i, j), v));
    }
  }
}
