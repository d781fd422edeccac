#include "wheelgebra/connection.hpp"

#include <stdexcept>

#include "wheelgebra/linalg.hpp"

namespace wg {

namespace {

Parity combine(Parity a, Parity b) {
  return Parity{static_cast<uint8_t>(a.s ^ b.s), static_cast<uint8_t>(a.d ^ b.d)};
}

}  // namespace

void Connection::check_value(int base_arrow, const WheelElement& v, bool left) const {
  const Quiver& q = *q_;
  int star = q.star_of(base_arrow);
  for (const auto& [k, c] : v.terms()) {
    if (k.degree() != 1)
      throw std::invalid_argument("Connection: value terms need exactly one word slot");
    const Path& w = k.word[0];
    if (w.star_count(q) != 1 || w.diff_count(q) != 1)
      throw std::invalid_argument(
          "Connection: value words carry one reversed and one differential arrow");
    if (w.tail(q) != q.arrow(star).tail || w.head(q) != q.arrow(star).head)
      throw std::invalid_argument("Connection: value endpoints do not match the generator");
    int dpos = -1, spos = -1;
    for (int i = 0; i < w.length(); ++i) {
      if (q.arrow(w.letter(i)).stratum == Stratum::Diff) dpos = i;
      if (q.arrow(w.letter(i)).stratum == Stratum::Star) spos = i;
    }
    if (left && dpos > spos)
      throw std::invalid_argument("Connection: left values put the form first");
    if (!left && dpos < spos)
      throw std::invalid_argument("Connection: right values put the form last");
    for (const auto& cy : k.cycs)
      if (cy.star_count(q) != 0 || cy.diff_count(q) != 0)
        throw std::invalid_argument("Connection: cyclic factors of values must be plain");
  }
}

void Connection::set_left(int base_arrow, WheelElement v) {
  check_value(base_arrow, v, true);
  if (v.is_zero()) left_.erase(base_arrow);
  else left_[base_arrow] = std::move(v);
}

void Connection::set_right(int base_arrow, WheelElement v) {
  check_value(base_arrow, v, false);
  if (v.is_zero()) right_.erase(base_arrow);
  else right_[base_arrow] = std::move(v);
}

WheelElement Connection::left(int base_arrow) const {
  auto it = left_.find(base_arrow);
  return it == left_.end() ? WheelElement(q_) : it->second;
}

WheelElement Connection::right(int base_arrow) const {
  auto it = right_.find(base_arrow);
  return it == right_.end() ? WheelElement(q_) : it->second;
}

WheelElement Connection::value(int base_arrow) const {
  WheelElement v = left(base_arrow);
  v += right(base_arrow);
  return v;
}

WheelElement nabla_extend(const Connection& nab, const WheelElement& u) {
  const Quiver& q = *u.quiver();
  WheelElement out(&q);
  for (const auto& [k, c] : u.terms()) {
    const int m = k.degree();
    // parities of all letters after a given site, in the term's letter order
    auto tail_parity = [&](int strand, int pos) {
      Parity p{0, 0};
      auto scan = [&](const std::vector<int>& ls, int from) {
        for (int i = from; i < static_cast<int>(ls.size()); ++i)
          p = combine(p, q.arrow_parity(ls[i]));
      };
      for (int s = strand; s < m + static_cast<int>(k.cycs.size()); ++s) {
        const auto& ls = s < m ? k.word[s].letters() : k.cycs[s - m].letters();
        scan(ls, s == strand ? pos + 1 : 0);
      }
      return p;
    };

    int diffs_before = 0;
    auto visit = [&](int strand) {
      const bool is_cyc = strand >= m;
      const auto& ls = is_cyc ? k.cycs[strand - m].letters() : k.word[strand].letters();
      for (int i = 0; i < static_cast<int>(ls.size()); ++i) {
        const Arrow& a = q.arrow(ls[i]);
        if (a.stratum == Stratum::Diff) {
          ++diffs_before;
          continue;
        }
        Rational sgn = (diffs_before & 1) ? -1 : 1;
        if (a.stratum == Stratum::Base) {
          std::vector<int> nl = ls;
          nl[i] = q.diff_of(ls[i]);
          WheelKey nk = k;
          if (is_cyc) {
            auto [cw, s] = cyclic_normalize(q, Path::of(q, nl));
            if (s == 0) continue;
            nk.cycs[strand - m] = cw;
            out.add_general(c * sgn * s, Perm(std::vector<int>(nk.sigma)), Perm(m), nk.word,
                            nk.cycs);
          } else {
            nk.word[strand] = Path::of(q, nl);
            out.add_general(c * sgn, Perm(std::vector<int>(nk.sigma)), Perm(m), nk.word,
                            nk.cycs);
          }
          continue;
        }
        // reversed arrow: substitute the stored value
        WheelElement val = nab.value(a.base);
        if (val.is_zero()) continue;
        Parity after = tail_parity(strand, i);
        for (const auto& [kv, cv] : val.terms()) {
          const Path& w = kv.word[0];
          std::vector<int> nl;
          nl.reserve(ls.size() + w.length() - 1);
          nl.insert(nl.end(), ls.begin(), ls.begin() + i);
          nl.insert(nl.end(), w.letters().begin(), w.letters().end());
          nl.insert(nl.end(), ls.begin() + i + 1, ls.end());
          // extra cyclic factors of the value travel past the rest of the term
          Parity vc{0, 0};
          for (const auto& cy : kv.cycs) vc = combine(vc, cy.parity(q));
          Rational coeff = c * sgn * cv * swap_sign(vc, after);
          WheelKey nk = k;
          nk.cycs.insert(nk.cycs.end(), kv.cycs.begin(), kv.cycs.end());
          if (is_cyc) {
            auto [cw, s] = cyclic_normalize(q, Path::of(q, nl));
            if (s == 0) continue;
            nk.cycs[strand - m] = cw;
            out.add_general(coeff * s, Perm(std::vector<int>(nk.sigma)), Perm(m), nk.word,
                            nk.cycs);
          } else {
            nk.word[strand] = Path::of(q, nl);
            out.add_general(coeff, Perm(std::vector<int>(nk.sigma)), Perm(m), nk.word,
                            nk.cycs);
          }
        }
      }
    };
    for (int s = 0; s < m + static_cast<int>(k.cycs.size()); ++s) visit(s);
  }
  return out;
}

WheelElement iota_element(const Quiver& q) {
  WheelElement out(&q);
  for (int e : q.base_arrows()) {
    Path p = Path::of(q, {q.star_of(e), q.diff_of(e)});
    auto [cw, s] = cyclic_normalize(q, p);
    if (s == 0) continue;
    out += WheelElement::from_cyclic(q, cw, s);
  }
  return out;
}

WheelElement rank_element(const Quiver& q) { return contract_iota(iota_element(q)); }

WheelElement bv_operator(const Connection& nab, const WheelElement& u) {
  return contract_iota(nabla_extend(nab, u));
}

WheelElement torsion(const Connection& nab) {
  return nabla_extend(nab, iota_element(*nab.quiver()));
}

namespace {

// Locates letters of a given stratum in a term.
std::vector<std::pair<Site, int>> stratum_sites(const Quiver& q, const WheelKey& k,
                                                Stratum st) {
  std::vector<std::pair<Site, int>> out;
  const int m = k.degree();
  for (int s = 0; s < m; ++s) {
    const auto& ls = k.word[s].letters();
    for (int i = 0; i < static_cast<int>(ls.size()); ++i)
      if (q.arrow(ls[i]).stratum == st) out.push_back({{s, i}, ls[i]});
  }
  for (int c = 0; c < static_cast<int>(k.cycs.size()); ++c) {
    const auto& ls = k.cycs[c].letters();
    for (int i = 0; i < static_cast<int>(ls.size()); ++i)
      if (q.arrow(ls[i]).stratum == st) out.push_back({{m + c, i}, ls[i]});
  }
  return out;
}

// Pairs the differential letter at `dsite` against every matching reversed
// arrow of the term.
WheelElement pair_diff_site(const Quiver& q, const WheelKey& k, const Rational& c,
                            Site dsite, int darrow) {
  WheelElement out(&q);
  for (const auto& [site, arrow] : stratum_sites(q, k, Stratum::Star))
    if (q.arrow(arrow).base == q.arrow(darrow).base) splice_pair(q, k, c, site, dsite, out);
  return out;
}

}  // namespace

WheelElement torsion_pair(const Connection& nab, int arrow_a, int arrow_b) {
  const Quiver& q = *nab.quiver();
  WheelElement tau = torsion(nab);
  Path pa = Path::of(q, {q.star_of(arrow_a)});
  Path pb = Path::of(q, {q.star_of(arrow_b)});
  WheelKey ka{{0}, {pa}, {}}, kb{{0}, {pb}, {}};
  WheelElement out(&q);
  for (const auto& [k, c] : tau.terms()) {
    // locate the derivation slot and the two form slots in cyclic order
    auto stars = stratum_sites(q, k, Stratum::Star);
    if (stars.size() != 1) throw std::logic_error("torsion: expected one derivation slot");
    auto diffs = stratum_sites(q, k, Stratum::Diff);
    if (diffs.size() != 2) throw std::logic_error("torsion: expected two form slots");
    // cyclic order from the star (all three sit in the same cyclic strand)
    Site s0 = stars[0].first;
    auto cyc_dist = [&](Site t) {
      int len = static_cast<int>(k.cycs[t.strand - k.degree()].letters().size());
      return ((t.pos - s0.pos) % len + len) % len;
    };
    Site d1 = diffs[0].first, d2 = diffs[1].first;
    int a1 = diffs[0].second, a2 = diffs[1].second;
    if (d1.strand == s0.strand && d2.strand == s0.strand && cyc_dist(d2) < cyc_dist(d1)) {
      std::swap(d1, d2);
      std::swap(a1, a2);
    }
    if (q.arrow(a1).base != arrow_a || q.arrow(a2).base != arrow_b) continue;
    // probe layout: (da-slot, db-slot, term); the term's strands shift by two
    auto [inner, cs] = concat_raw(q, kb, k);
    auto [full, cs2] = concat_raw(q, ka, inner);
    WheelElement step1(&q);
    splice_pair(q, full, c * cs * cs2, Site{0, 0}, Site{d1.strand + 2, d1.pos}, step1);
    // track the remaining form slot: it is the unique differential letter
    for (const auto& [k2, c2] : step1.terms()) {
      auto rest = stratum_sites(q, k2, Stratum::Diff);
      if (rest.size() != 1) throw std::logic_error("torsion: pairing bookkeeping failed");
      // the probe for the second slot is the remaining bare reversed arrow
      // of arrow_b sitting in its own slot
      auto bstars = stratum_sites(q, k2, Stratum::Star);
      Site probe{-1, -1};
      for (const auto& [site, arrow] : bstars) {
        if (site.strand < k2.degree() && k2.word[site.strand].length() == 1 &&
            arrow == q.star_of(arrow_b)) {
          probe = site;
          break;
        }
      }
      if (probe.strand < 0) continue;
      splice_pair(q, k2, c2, probe, rest[0].first, out);
    }
  }
  return out;
}

WheelElement torsion_formula(const Connection& nab, int arrow_a, int arrow_b) {
  const Quiver& q = *nab.quiver();
  Path pa = Path::of(q, {q.star_of(arrow_a)});
  Path pb = Path::of(q, {q.star_of(arrow_b)});
  // (nabla_r)_{da}(db): the probe contracts the form slot of the right value
  WheelElement first(&q);
  {
    WheelElement vr = nab.right(arrow_b);
    WheelKey ka{{0}, {pa}, {}};
    for (const auto& [k, c] : vr.terms()) {
      auto [key, cs] = concat_raw(q, ka, k);
      auto diffs = stratum_sites(q, key, Stratum::Diff);
      for (const auto& [dsite, darrow] : diffs)
        if (q.arrow(darrow).base == arrow_a)
          splice_pair(q, key, c * cs, Site{0, 0}, dsite, first);
    }
  }
  // flip (nabla_l)_{db}(da): contract db against the left value of arrow_a,
  // then swap the two slots with the Koszul sign
  WheelElement second(&q);
  {
    WheelElement vl = nab.left(arrow_a);
    WheelKey kb{{0}, {pb}, {}};
    WheelElement raw(&q);
    for (const auto& [k, c] : vl.terms()) {
      auto [key, cs] = concat_raw(q, kb, k);
      auto diffs = stratum_sites(q, key, Stratum::Diff);
      for (const auto& [dsite, darrow] : diffs)
        if (q.arrow(darrow).base == arrow_b)
          splice_pair(q, key, c * cs, Site{0, 0}, dsite, raw);
    }
    for (const auto& [k, c] : raw.terms()) {
      int s = swap_sign(k.word[0].parity(q), k.word[1].parity(q));
      WheelElement t(&q);
      t.add_key(k, c * s);
      second += wheel_act_diag(Perm::block_swap(1, 1), t);
    }
  }
  // {{da, db}} vanishes on bare generators of a path algebra
  return first - second;
}

WheelElement curvature_trace(const Connection& nab) {
  // Close each twice-differentiated generator against its dual basis vector:
  // conceptually the word alpha e* beta is wrapped into the necklace
  // [alpha e* beta de] and the fresh differential arrow is contracted with
  // the derivation slot, leaving the two arcs [beta][alpha]. Signs follow the
  // same conventions as the splice engine, with the virtual differential
  // letter sitting at the end of the word block.
  const Quiver& q = *nab.quiver();
  WheelElement out(&q);
  for (int e : q.base_arrows()) {
    WheelElement one =
        nabla_extend(nab, WheelElement::from_path(q, Path::of(q, {q.star_of(e)})));
    WheelElement two = nabla_extend(nab, one);
    const int de = q.diff_of(e);
    for (const auto& [k, c] : two.terms()) {
      if (k.degree() != 1) throw std::logic_error("curvature: unexpected shape");
      const Path& w = k.word[0];
      int spos = -1;
      for (int i = 0; i < w.length(); ++i)
        if (q.arrow(w.letter(i)).stratum == Stratum::Star) spos = i;
      if (spos < 0 || q.arrow(w.letter(spos)).base != e) continue;
      Path alpha = w.sub(q, 0, spos), beta = w.sub(q, spos + 1, w.length());
      if (!alpha.closed(q) || !beta.closed(q)) continue;
      auto [cb, sb] = cyclic_normalize(q, beta);
      if (sb == 0) continue;
      auto [ca, sa] = cyclic_normalize(q, alpha);
      if (sa == 0) continue;
      // letters: [alpha][star][beta][virtual de][cycs]
      //   -> [star][de][cycs][beta][alpha]
      const int n = w.length();
      int ncl = 0;
      for (const auto& cy : k.cycs) ncl += cy.length();
      std::vector<Parity> par(n + 1 + ncl);
      std::vector<int> pos(n + 1 + ncl, -1);
      for (int i = 0; i < n; ++i) par[i] = q.arrow_parity(w.letter(i));
      par[n] = q.arrow_parity(de);
      {
        int idx = n + 1;
        for (const auto& cy : k.cycs)
          for (int l : cy.letters()) par[idx++] = q.arrow_parity(l);
      }
      int next = 0;
      pos[spos] = next++;
      pos[n] = next++;
      for (int i = n + 1; i < n + 1 + ncl; ++i) pos[i] = next++;
      for (int i = spos + 1; i < n; ++i) pos[i] = next++;
      for (int i = 0; i < spos; ++i) pos[i] = next++;
      int sg = reorder_sign(pos, par);
      std::vector<CyclicWord> cycs = k.cycs;
      cycs.push_back(cb);
      cycs.push_back(ca);
      // normalized so that contraction with this form is the square of the
      // operator, not its negative
      out.add_general(-c * sg * sb * sa, Perm(0), Perm(0), {}, std::move(cycs));
    }
  }
  return out;
}

WheelElement contract_form(const WheelElement& omega, const WheelElement& u) {
  const Quiver& q = *u.quiver();
  WheelElement out(&q);
  for (const auto& [ko, co] : omega.terms())
    for (const auto& [ku, cu] : u.terms()) {
      auto [key, cs] = concat_raw(q, ko, ku);
      // absorb the differential letters one at a time
      WheelElement work(&q);
      work.add_key(key, co * cu * cs);
      while (true) {
        WheelElement next(&q);
        bool found = false;
        for (const auto& [k, c] : work.terms()) {
          auto diffs = stratum_sites(q, k, Stratum::Diff);
          if (diffs.empty()) {
            next.add_key(k, c);
            continue;
          }
          found = true;
          next += pair_diff_site(q, k, c, diffs[0].first, diffs[0].second);
        }
        work = next;
        if (!found) break;
      }
      out += work;
    }
  return out;
}

WheelElement divergence(const Connection& nab, int base_arrow) {
  const Quiver& q = *nab.quiver();
  return bv_operator(nab,
                     WheelElement::from_path(q, Path::of(q, {q.star_of(base_arrow)})));
}

}  // namespace wg

namespace wg {

std::vector<Path> connection_value_words(const Quiver& q, int e, bool left, int extra) {
  std::vector<Path> out;
  int t = q.arrow(q.star_of(e)).tail, h = q.arrow(q.star_of(e)).head;
  for (int len = 2; len <= extra + 2; ++len) {
    std::vector<std::vector<int>> cur{{}};
    for (int i = 0; i < len; ++i) {
      std::vector<std::vector<int>> nxt;
      for (auto& w : cur)
        for (int a = 0; a < q.num_arrows(); ++a) {
          if (!w.empty() && q.arrow(w.back()).head != q.arrow(a).tail) continue;
          auto w2 = w;
          w2.push_back(a);
          nxt.push_back(std::move(w2));
        }
      cur = std::move(nxt);
    }
    for (const auto& w : cur) {
      int stars = 0, diffs = 0, dpos = -1, spos = -1;
      for (size_t i = 0; i < w.size(); ++i) {
        auto st = q.arrow(w[i]).stratum;
        if (st == Stratum::Star) { ++stars; spos = static_cast<int>(i); }
        if (st == Stratum::Diff) { ++diffs; dpos = static_cast<int>(i); }
      }
      if (stars != 1 || diffs != 1) continue;
      if (left && dpos > spos) continue;
      if (!left && dpos < spos) continue;
      Path p = Path::of(q, w);
      if (p.tail(q) != t || p.head(q) != h) continue;
      out.push_back(p);
    }
  }
  return out;
}

ConnectionBasis connection_basis(const Quiver& q, int extra) {
  ConnectionBasis basis;
  for (int e : q.base_arrows())
    for (const auto& w : connection_value_words(q, e, true, extra))
      basis.words.push_back({e, w});
  basis.num_left = static_cast<int>(basis.words.size());
  for (int e : q.base_arrows())
    for (const auto& w : connection_value_words(q, e, false, extra))
      basis.words.push_back({e, w});

  // Torsion is linear in the stored values; solve for its kernel.
  std::map<WheelKey, int> rowids;
  std::vector<std::vector<Rational>> cols;
  const int n = static_cast<int>(basis.words.size());
  for (int c = 0; c < n; ++c) {
    Connection nab(&q);
    std::vector<Rational> coeffs(n, 0);
    coeffs[c] = 1;
    Connection single = connection_from_coeffs(q, basis, coeffs);
    WheelElement tau = torsion(single);
    std::vector<Rational> col;
    for (const auto& [k, co] : tau.terms()) {
      auto [it, ins] = rowids.emplace(k, static_cast<int>(rowids.size()));
      (void)ins;
    }
    cols.push_back({});
  }
  // second pass now that the row index set is complete
  RatMatrix mat(rowids.size(), std::vector<Rational>(n, 0));
  for (int c = 0; c < n; ++c) {
    std::vector<Rational> coeffs(n, 0);
    coeffs[c] = 1;
    Connection single = connection_from_coeffs(q, basis, coeffs);
    WheelElement tau = torsion(single);
    for (const auto& [k, co] : tau.terms()) mat[rowids.at(k)][c] = co;
  }
  basis.torsion_free = kernel_basis(std::move(mat), n);
  return basis;
}

Connection connection_from_coeffs(const Quiver& q, const ConnectionBasis& basis,
                                  const std::vector<Rational>& coeffs) {
  Connection nab(&q);
  std::map<int, WheelElement> lv, rv;
  for (int i = 0; i < static_cast<int>(basis.words.size()); ++i) {
    if (coeffs[i] == 0) continue;
    auto& tgt = (i < basis.num_left) ? lv : rv;
    auto [it, ins] = tgt.emplace(basis.words[i].first, WheelElement(&q));
    it->second += WheelElement::from_path(q, basis.words[i].second, coeffs[i]);
  }
  for (auto& [e, v] : lv) nab.set_left(e, v);
  for (auto& [e, v] : rv) nab.set_right(e, v);
  return nab;
}

}  // namespace wg
