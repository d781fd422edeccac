#include "doctest.h"

#include <random>

#include "wheelgebra/cyclic.hpp"
#include "wheelgebra/ncpoly.hpp"
#include "wheelgebra/permutation.hpp"
#include "wheelgebra/quiver.hpp"

using namespace wg;

namespace {

Quiver one_loop(int star_parity = 0, bool omega = false) {
  return Quiver({"v"}, {{"x", 0, 0, Stratum::Base, -1}}, true, star_parity, omega);
}

Quiver two_loops(int star_parity = 0, bool omega = false) {
  return Quiver({"v"},
                {{"x", 0, 0, Stratum::Base, -1}, {"y", 0, 0, Stratum::Base, -1}},
                true, star_parity, omega);
}

// Independent oracle: Koszul sign computed by decomposing the permutation
// into adjacent transpositions and multiplying one swap sign per step.
int koszul_brute(const Perm& sigma, std::vector<Parity> ps) {
  // Move items into target order by bubble sort on target positions.
  std::vector<int> pos(sigma.degree());
  for (int i = 0; i < sigma.degree(); ++i) pos[i] = sigma(i);
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < pos.size(); ++i) {
      if (pos[i] > pos[i + 1]) {
        sign *= swap_sign(ps[i], ps[i + 1]);
        std::swap(pos[i], pos[i + 1]);
        std::swap(ps[i], ps[i + 1]);
        moved = true;
      }
    }
  }
  return sign;
}

Perm random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(img[i], img[rng() % (i + 1)]);
  return Perm(img);
}

Path random_loop_path(std::mt19937_64& rng, const Quiver& q, int len) {
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) letters.push_back(static_cast<int>(rng() % q.num_arrows()));
  // single-vertex quivers: everything is composable
  return Path::of(q, letters);
}

}  // namespace

TEST_CASE("permutation basics") {
  Perm c = Perm::cycle(3, {0, 1, 2});
  CHECK(c(0) == 1);
  CHECK(c(2) == 0);
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.cycle_string() == "(1 2 3)");
  CHECK(Perm(3).cycle_string() == "id");

  Perm b = Perm::block_swap(2, 1);  // (12)^{2,1}
  CHECK(b(0) == 1);
  CHECK(b(1) == 2);
  CHECK(b(2) == 0);
}

TEST_CASE("koszul sign examples") {
  Perm t = Perm::cycle(2, {0, 1});
  CHECK(koszul_sign(t, std::vector<int>{1, 1}) == -1);
  CHECK(koszul_sign(t, std::vector<int>{0, 1}) == 1);
  // 3-cycle on three odd factors decomposes into two transpositions.
  CHECK(koszul_sign(Perm::cycle(3, {0, 1, 2}), std::vector<int>{1, 1, 1}) == 1);
}

TEST_CASE("koszul sign is multiplicative and matches brute force") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    Perm s = random_perm(rng, n), t = random_perm(rng, n);
    std::vector<Parity> ps(n);
    for (auto& p : ps) p = Parity{static_cast<uint8_t>(rng() & 1), static_cast<uint8_t>(rng() & 1)};
    CHECK(koszul_sign(s, ps) == koszul_brute(s, ps));
    // tau_{st} = tau_s o tau_t: the parities seen by s are those permuted by t.
    std::vector<Parity> tps(n);
    for (int i = 0; i < n; ++i) tps[t(i)] = ps[i];
    CHECK(koszul_sign(s * t, ps) == koszul_sign(s, tps) * koszul_sign(t, ps));
  }
}

TEST_CASE("path composition and idempotents") {
  Quiver q = two_loops();
  int x = *q.arrow_id("x"), y = *q.arrow_id("y");
  Path ev = Path::trivial(0);
  Path px = Path::of(q, {x}), py = Path::of(q, {y});

  CHECK(path_compose(q, ev, ev) == NCPoly::path(q, ev));
  auto xy = path_compose(q, px, py);
  CHECK(xy == NCPoly::path(q, Path::of(q, {x, y})));

  Quiver a2({"u", "w"}, {{"a", 0, 1, Stratum::Base, -1}}, false, 0, false);
  Path pa = Path::of(a2, {*a2.arrow_id("a")});
  CHECK(path_compose(a2, pa, pa).is_zero());  // head(a) != tail(a)
}

TEST_CASE("ncpoly is associative and unital") {
  Quiver q = two_loops();
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    NCPoly f(&q), g(&q), h(&q);
    for (int t = 0; t < 3; ++t) {
      f.add(random_loop_path(rng, q, 1 + rng() % 3), Rational(static_cast<long>(rng() % 5) - 2));
      g.add(random_loop_path(rng, q, 1 + rng() % 3), Rational(static_cast<long>(rng() % 5) - 2));
      h.add(random_loop_path(rng, q, 1 + rng() % 3), Rational(static_cast<long>(rng() % 5) - 2));
    }
    CHECK(ncpoly_mul(ncpoly_mul(f, g), h) == ncpoly_mul(f, ncpoly_mul(g, h)));
    CHECK(ncpoly_mul(f, NCPoly::unit(q)) == f);
    CHECK(ncpoly_mul(NCPoly::unit(q), f) == f);
  }
  NCPoly s = NCPoly::path(q, Path::of(q, {*q.arrow_id("x")}), Rational(2, 3));
  NCPoly t = NCPoly::path(q, Path::of(q, {*q.arrow_id("y")}), Rational(3, 2));
  CHECK(ncpoly_mul(s, t) ==
        NCPoly::path(q, Path::of(q, {*q.arrow_id("x"), *q.arrow_id("y")})));
}

TEST_CASE("cyclic normalization: signs and canonical rotation") {
  // Odd regime: x even, x* odd.
  Quiver q = one_loop(1);
  int x = *q.arrow_id("x"), xs = q.star_of(x);

  auto [c1, s1] = cyclic_normalize(q, Path::of(q, {xs, x}));
  auto [c2, s2] = cyclic_normalize(q, Path::of(q, {x, xs}));
  CHECK(c1 == c2);
  CHECK(s1 == 1);  // rotating the odd x* past the even x costs nothing
  CHECK(s2 == 1);
  CHECK(c2.letters() == std::vector<int>{x, xs});

  // [x* x*] = -[x* x*] so the class vanishes.
  auto [c3, s3] = cyclic_normalize(q, Path::of(q, {xs, xs}));
  CHECK(s3 == 0);
  (void)c3;

  // Even regime: nothing vanishes.
  Quiver qe = one_loop(0);
  auto [c4, s4] = cyclic_normalize(qe, Path::of(qe, {qe.star_of(0), qe.star_of(0)}));
  CHECK(s4 == 1);
  (void)c4;
}

TEST_CASE("cyclic normalization is idempotent and rotation-coherent") {
  Quiver q = two_loops(1);
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    Path p = random_loop_path(rng, q, 1 + rng() % 5);
    auto [c, s] = cyclic_normalize(q, p);
    if (s == 0) continue;
    auto [c2, s2] = cyclic_normalize(q, c.as_path(q));
    CHECK(c2 == c);
    CHECK(s2 == 1);
    // All rotations give the same class; signs differ by the rotation sign.
    std::vector<int> letters = p.letters();
    Parity total = p.parity(q);
    Rational rotsign = 1;
    for (int r = 0; r + 1 < p.length(); ++r) {
      Parity front = q.arrow_parity(letters.front());
      Parity rest{static_cast<uint8_t>(total.s ^ front.s),
                  static_cast<uint8_t>(total.d ^ front.d)};
      rotsign *= swap_sign(front, rest);
      letters.push_back(letters.front());
      letters.erase(letters.begin());
      auto [cr, sr] = cyclic_normalize(q, Path::of(q, letters));
      CHECK(cr == c);
      CHECK(sr == s / rotsign);  // [p] = s[c], [p] = rotsign [p_r] = rotsign sr [c]
    }
  }
}
