#include "doctest.h"

#include "support.hpp"
#include "wheelgebra/connection.hpp"
#include "wheelgebra/rep.hpp"

using namespace wg;
using namespace wgtest;

namespace {

CyclicWord mk_cyc(const Quiver& q, std::vector<int> letters) {
  auto [c, s] = cyclic_normalize(q, Path::of(q, std::move(letters)));
  REQUIRE(s == 1);
  return c;
}

}  // namespace

TEST_CASE("path evaluation basics") {
  Quiver q = one_loop(0, false);
  RepModel rep(q, DimVector{{2}});

  auto id = rep.ev_path(Path::trivial(0));
  CHECK(id.at(0, 0) == Poly::constant(1));
  CHECK(id.at(0, 1).is_zero());

  // numeric: ev(x^2) at X = [[1,1],[0,1]] is [[1,2],[0,1]]
  RepModel::PointMatrix X{{{1, 1}, {0, 1}}};
  std::map<int, RepModel::PointMatrix> pt{{0, X}};
  auto xx = rep.ev_path(Path::of(q, {0, 0}));
  CHECK(rep.eval_at(xx.at(0, 0), pt) == 1);
  CHECK(rep.eval_at(xx.at(0, 1), pt) == 2);
  CHECK(rep.eval_at(xx.at(1, 0), pt) == 0);
  CHECK(rep.eval_at(xx.at(1, 1), pt) == 1);

  // trace of a nilpotent point
  RepModel::PointMatrix N{{{0, 1}, {0, 0}}};
  std::map<int, RepModel::PointMatrix> pt2{{0, N}};
  CHECK(rep.eval_at(rep.ev_trace(Path::of(q, {0})), pt2) == 0);

  // mismatched shapes refuse to evaluate
  Quiver a2 = round_trip(0, false);
  RepModel rep2(a2, DimVector{{2, 3}});
  CHECK_THROWS(rep2.ev_trace(Path::of(a2, {0})));
}

TEST_CASE("rank element evaluates to the dimension of the representation space") {
  struct Case {
    Quiver q;
    DimVector d;
  };
  std::vector<Case> cases;
  cases.push_back({one_loop(1, true), DimVector{{2}}});
  cases.push_back({two_loops(1, true), DimVector{{2}}});
  cases.push_back({round_trip(1, true), DimVector{{2, 3}}});
  for (auto& [q, d] : cases) {
    RepModel rep(q, d);
    Rational expd = 0;
    for (int e : q.base_arrows())
      expd += Rational(rep.dim(q.arrow(e).head)) * rep.dim(q.arrow(e).tail);
    Poly got = rep.ev_f0(rank_element(q));
    CHECK(got == Poly::constant(expd));
  }
  // two loops at d = 2: rank evaluates to 8, the dimension of the space
  RepModel rep(cases[1].q, cases[1].d);
  CHECK(rep.ev_f0(rank_element(cases[1].q)) == Poly::constant(8));
}

TEST_CASE("evaluation is a homomorphism compatible with contractions") {
  for (int dd : {1, 2, 3}) {
    Quiver q = two_loops(0, false);
    RepModel rep(q, DimVector{{dd}});
    Rng rng(800 + dd);
    for (int it = 0; it < 8; ++it) {
      // degree-zero products multiply
      Path pa = random_closed_path(rng, q, irange(rng, 1, 3));
      Path pb = random_closed_path(rng, q, irange(rng, 1, 3));
      auto [ca, sa] = cyclic_normalize(q, pa);
      auto [cb, sb] = cyclic_normalize(q, pb);
      if (sa == 0 || sb == 0) continue;
      WheelElement u = WheelElement::from_cyclic(q, ca);
      WheelElement v = WheelElement::from_cyclic(q, cb);
      CHECK(rep.ev_f0(wheel_product(u, v)) == rep.ev_f0(u) * rep.ev_f0(v));

      // mu_{1,1} on a word is the trace of its matrix
      Path w = random_path(rng, q, irange(rng, 1, 3));
      WheelElement f1 = WheelElement::from_path(q, w);
      auto m = rep.ev_f1(f1);
      Poly tr;
      for (int i = 0; i < m.rows; ++i) tr += m.at(i, i);
      CHECK(rep.ev_f0(contract(f1, 1, 1)) == tr);

      // degree two: contractions match tensor traces
      Path w2 = random_path(rng, q, irange(rng, 1, 2));
      WheelElement f2 = wheel_product(f1, WheelElement::from_path(q, w2));
      auto t = rep.ev_f2(f2);
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
          auto contracted = contract(f2, i, j);
          auto got = rep.ev_f1(contracted);
          // glue output leg i to input leg j of the tensor
          RepModel::Matrix expd{i == 1 ? t.d2 : t.d1, j == 1 ? t.e2 : t.e1, {}};
          expd.a.assign(expd.rows * expd.cols, Poly{});
          for (int o = 0; o < expd.rows; ++o)
            for (int uu = 0; uu < expd.cols; ++uu) {
              Poly s;
              int glue_max = (i == 1) ? t.d1 : t.d2;
              for (int g = 0; g < glue_max; ++g) {
                int o1 = (i == 1) ? g : o, o2 = (i == 1) ? o : g;
                int i1 = (j == 1) ? g : uu, i2 = (j == 1) ? uu : g;
                s += t.at(o1, o2, i1, i2);
              }
              expd.at(o, uu) = s;
            }
          bool same = got.rows == expd.rows && got.cols == expd.cols;
          if (same)
            for (int o = 0; o < got.rows && same; ++o)
              for (int uu = 0; uu < got.cols && same; ++uu)
                same = got.at(o, uu) == expd.at(o, uu);
          CHECK(same);
        }
    }
  }
}

TEST_CASE("canonical Poisson bracket: pinned values and the bridge example") {
  Quiver q = one_loop(0, false);
  RepModel rep(q, DimVector{{2}});
  int x = 0, xs = q.star_of(0);

  Poly x11 = Poly::variable(rep.var(x, 0, 0));
  Poly xs11 = Poly::variable(rep.var(xs, 0, 0));
  CHECK(rep.matrix_poisson(x11, xs11) == Poly::constant(1));

  Poly trxxs = rep.ev_trace(Path::of(q, {x, xs}));
  CHECK(rep.matrix_poisson(trxxs, trxxs).is_zero());

  // {tr(X^2 X*), tr(X (X*)^2)} = ev([x^2(x*)^2] + 2[x x* x x*])
  Poly f = rep.ev_trace(Path::of(q, {x, x, xs}));
  Poly g = rep.ev_trace(Path::of(q, {x, xs, xs}));
  WheelElement expd = WheelElement::from_cyclic(q, mk_cyc(q, {x, x, xs, xs})) +
                      WheelElement::from_cyclic(q, mk_cyc(q, {x, xs, x, xs})).scaled(2);
  CHECK(rep.matrix_poisson(f, g) == rep.ev_f0(expd));
}

TEST_CASE("Poisson bracket oracle for the necklace bracket") {
  for (int dd : {2, 3}) {
    Quiver q = two_loops(0, false);
    RepModel rep(q, DimVector{{dd}});
    Rng rng(900 + dd);
    int used = 0;
    for (int it = 0; it < 25; ++it) {
      Path pa = random_closed_path(rng, q, irange(rng, 1, 5));
      Path pb = random_closed_path(rng, q, irange(rng, 1, 5));
      auto [ca, sa] = cyclic_normalize(q, pa);
      auto [cb, sb] = cyclic_normalize(q, pb);
      if (sa == 0 || sb == 0) continue;
      ++used;
      Poly lhs = rep.ev_f0(necklace_bracket(q, ca, cb));
      Poly rhs = rep.matrix_poisson(rep.ev_cyclic(ca), rep.ev_cyclic(cb));
      CHECK(lhs == rhs);
    }
    CHECK(used > 15);
  }
}

TEST_CASE("Poisson bracket satisfies the Jacobi identity (oracle self-test)") {
  Quiver q = one_loop(0, false);
  RepModel rep(q, DimVector{{2}});
  Rng rng(111);
  for (int it = 0; it < 10; ++it) {
    auto mk = [&]() {
      Path p = random_closed_path(rng, q, irange(rng, 1, 3));
      return rep.ev_trace(p);
    };
    Poly f = mk(), g = mk(), h = mk();
    Poly jac = rep.matrix_poisson(f, rep.matrix_poisson(g, h));
    jac += rep.matrix_poisson(g, rep.matrix_poisson(h, f));
    jac += rep.matrix_poisson(h, rep.matrix_poisson(f, g));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("odd Laplacian: examples and square zero") {
  Quiver q = one_loop(1, false);
  RepModel rep(q, DimVector{{2}});
  int x = 0, xs = q.star_of(0);

  // Delta(sum X[i,j] xi[j,i]) = d^2 = ev([x x*]-image under D)
  Poly f = rep.ev_trace(Path::of(q, {x, xs}));
  CHECK(rep.odd_laplacian(f) == Poly::constant(4));

  CHECK(rep.odd_laplacian(rep.ev_trace(Path::of(q, {x, x}))).is_zero());

  Rng rng(222);
  for (int it = 0; it < 20; ++it) {
    Path p = random_closed_path(rng, q, irange(rng, 1, 4));
    Poly g = rep.ev_trace(p);
    CHECK(rep.odd_laplacian(rep.odd_laplacian(g)).is_zero());
  }
}

TEST_CASE("BV oracle: evaluation intertwines the operator and the Laplacian") {
  for (int dd : {2, 3}) {
    Quiver q = two_loops(1, true);
    RepModel rep(q, DimVector{{dd}});
    Connection triv = Connection::trivial(q);
    Rng rng(1000 + dd);
    int used = 0;
    for (int it = 0; it < 25; ++it) {
      Path p = random_closed_path(rng, q, irange(rng, 1, 5));
      auto [c, s] = cyclic_normalize(q, p);
      if (s == 0) continue;
      ++used;
      WheelElement u = WheelElement::from_cyclic(q, c);
      // products of two necklaces exercise the gluing part
      if (it % 2) {
        Path p2 = random_closed_path(rng, q, irange(rng, 1, 3));
        auto [c2, s2] = cyclic_normalize(q, p2);
        if (s2 != 0) u = wheel_product(u, WheelElement::from_cyclic(q, c2));
      }
      Poly lhs = rep.ev_f0(bv_operator(triv, u));
      Poly rhs = rep.odd_laplacian(rep.ev_f0(u));
      CHECK(lhs == rhs);  // global sign convention: +1
    }
    CHECK(used > 15);
  }
}
