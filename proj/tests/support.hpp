#pragma once

// Shared helpers for the test suites: standard quivers and seeded random
// generators. All randomness is drawn via explicit modulo so runs are
// reproducible across platforms.

#include <random>

#include "wheelgebra/cyclic.hpp"
#include "wheelgebra/ncpoly.hpp"
#include "wheelgebra/quiver.hpp"
#include "wheelgebra/wheel.hpp"

namespace wgtest {

using namespace wg;
using Rng = std::mt19937_64;

inline Quiver one_loop(int star_parity, bool omega = false) {
  return Quiver({"v"}, {{"x", 0, 0, Stratum::Base, -1}}, true, star_parity, omega);
}

inline Quiver two_loops(int star_parity, bool omega = false) {
  return Quiver({"v"},
                {{"x", 0, 0, Stratum::Base, -1}, {"y", 0, 0, Stratum::Base, -1}},
                true, star_parity, omega);
}

// Two vertices, two arrows a: u -> w and b: w -> u.
inline Quiver round_trip(int star_parity, bool omega = false) {
  return Quiver({"u", "w"},
                {{"a", 0, 1, Stratum::Base, -1}, {"b", 1, 0, Stratum::Base, -1}},
                true, star_parity, omega);
}

inline long irange(Rng& rng, long lo, long hi) {  // inclusive bounds
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rational rcoeff(Rng& rng) {
  long n = irange(rng, -3, 3);
  return Rational(n == 0 ? 1 : n);
}

inline Perm random_perm(Rng& rng, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng() % (i + 1)]);
  return Perm(img);
}

// Random composable path of exactly len letters starting anywhere; may come up
// shorter on quivers with dead ends. len == 0 gives a trivial path.
inline Path random_path(Rng& rng, const Quiver& q, int len,
                        bool allow_star = true, bool allow_diff = false) {
  int v = static_cast<int>(rng() % q.num_vertices());
  std::vector<int> letters;
  for (int k = 0; k < len; ++k) {
    std::vector<int> out;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrow(a).tail != v) continue;
      if (!allow_star && q.arrow(a).stratum == Stratum::Star) continue;
      if (!allow_diff && q.arrow(a).stratum == Stratum::Diff) continue;
      out.push_back(a);
    }
    if (out.empty()) break;
    int a = out[rng() % out.size()];
    letters.push_back(a);
    v = q.arrow(a).head;
  }
  if (letters.empty()) return Path::trivial(v);
  return Path::of(q, letters);
}

inline Path random_closed_path(Rng& rng, const Quiver& q, int len, bool allow_star = true) {
  for (int tries = 0; tries < 200; ++tries) {
    Path p = random_path(rng, q, len, allow_star);
    if (p.closed(q) && p.length() == len) return p;
  }
  return Path::trivial(static_cast<int>(rng() % q.num_vertices()));
}

inline NCPoly random_ncpoly(Rng& rng, const Quiver& q, int maxlen, int terms,
                            bool allow_star = true) {
  NCPoly f(&q);
  for (int t = 0; t < terms; ++t)
    f.add(random_path(rng, q, static_cast<int>(irange(rng, 0, maxlen)), allow_star),
          rcoeff(rng));
  return f;
}

// Random wheel element, homogeneous of the given wheel degree.
inline WheelElement random_wheel(Rng& rng, const Quiver& q, int degree, int maxlen,
                                 int nterms, int maxcycs = 1, bool allow_star = true) {
  WheelElement u(&q);
  for (int t = 0; t < nterms; ++t) {
    std::vector<Path> word;
    for (int k = 0; k < degree; ++k)
      word.push_back(random_path(rng, q, static_cast<int>(irange(rng, 0, maxlen)), allow_star));
    std::vector<CyclicWord> cycs;
    int nc = static_cast<int>(irange(rng, 0, maxcycs));
    for (int k = 0; k < nc; ++k) {
      Path p = random_closed_path(rng, q, static_cast<int>(irange(rng, 1, maxlen)), allow_star);
      if (!p.closed(q)) continue;
      auto [c, s] = cyclic_normalize(q, p);
      if (s == 0) continue;
      cycs.push_back(c);
    }
    u.add_general(rcoeff(rng), random_perm(rng, degree), random_perm(rng, degree),
                  std::move(word), std::move(cycs));
  }
  return u;
}

}  // namespace wgtest
