#pragma once

#include "partpoly/int_poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace partpoly {

/// Open interval (lo, hi) isolating exactly one simple real root of the
/// squarefree part of the queried polynomial. The recorded endpoint signs are
/// the signs of the squarefree part and are always opposite.
struct RootInterval {
  Rational lo, hi;
  int sign_lo = 0, sign_hi = 0;

  Rational width() const { return Rational(hi - lo); }
  Rational midpoint() const { return Rational((lo + hi) / 2); }
};

/// Complete description of the real roots of the squarefree part: rational
/// roots are listed exactly, every other root gets one isolating interval.
/// Exact roots and intervals are sorted and pairwise disjoint.
struct RootReport {
  std::vector<Rational> exact_roots;
  std::vector<RootInterval> intervals;
  Rational precision;  // widest isolating interval (0 when all roots are exact)
};

namespace detail {

/// Sturm chain: seq[0] is the (primitive) input, seq[1] its derivative, then
/// negated remainders, each renormalized to a primitive integer polynomial
/// with the sign pattern of the rational chain preserved.
struct SturmChain {
  std::vector<IntPoly> seq;
};

inline SturmChain make_sturm_chain(IntPoly f) {
  SturmChain ch;
  f.normalize();
  make_primitive(f);
  ch.seq.push_back(std::move(f));
  if (ch.seq[0].degree() < 1) return ch;
  IntPoly d = derivative(ch.seq[0]);
  make_primitive(d);
  ch.seq.push_back(std::move(d));
  while (ch.seq.back().degree() >= 1) {
    IntPoly r = signed_pseudo_rem(ch.seq[ch.seq.size() - 2], ch.seq.back());
    if (r.is_zero()) break;  // last element is the gcd; fine for counting
    for (Int& x : r.c) x = -x;
    make_primitive(r);
    ch.seq.push_back(std::move(r));
  }
  return ch;
}

inline int count_changes(const std::vector<int>& signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

inline int variations_at(const SturmChain& ch, const Rational& x) {
  std::vector<int> signs(ch.seq.size());
  for (std::size_t i = 0; i < ch.seq.size(); ++i) signs[i] = sign_at(ch.seq[i], x);
  return count_changes(signs);
}

inline int variations_at_pos_inf(const SturmChain& ch) {
  std::vector<int> signs(ch.seq.size());
  for (std::size_t i = 0; i < ch.seq.size(); ++i)
    signs[i] = ch.seq[i].is_zero() ? 0 : sgn(ch.seq[i].c.back());
  return count_changes(signs);
}

inline int variations_at_neg_inf(const SturmChain& ch) {
  std::vector<int> signs(ch.seq.size());
  for (std::size_t i = 0; i < ch.seq.size(); ++i) {
    if (ch.seq[i].is_zero()) {
      signs[i] = 0;
    } else {
      const int s = sgn(ch.seq[i].c.back());
      signs[i] = (ch.seq[i].degree() % 2 == 0) ? s : -s;
    }
  }
  return count_changes(signs);
}

/// Distinct real roots in (a, b]; endpoints must satisfy a < b.
inline long roots_in(const SturmChain& ch, const Rational& a, const Rational& b) {
  return variations_at(ch, a) - variations_at(ch, b);
}

/// Smallest power of two strictly greater than q (q >= 0).
inline Rational dyadic_upper_bound(const Rational& q) {
  Int two(2);
  Rational b(1);
  while (b <= q) b *= two;
  return b;
}

}  // namespace detail

/// p / gcd(p, p'): same real and complex roots, all simple. Returned as a
/// primitive integer-coefficient polynomial with positive leading coefficient.
inline Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  IntPoly f = to_int_poly(p);
  if (f.degree() < 1) return Poly::constant(Rational(1));
  IntPoly g = int_poly_gcd(f, derivative(f));
  IntPoly sq = g.degree() >= 1 ? divide_exact(f, g) : std::move(f);
  make_primitive(sq);
  if (sq.c.back() < 0)
    for (Int& x : sq.c) x = -x;
  return to_poly(sq);
}

/// Isolates all real roots of squarefree_part(p). Zero, small integer roots,
/// and any rational root hit head-on during bisection are reported exactly;
/// everything else gets a sign-change interval from Sturm bisection over
/// dyadic points.
inline RootReport isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  RootReport rep;
  rep.precision = 0;

  IntPoly f = to_int_poly(p);
  if (f.degree() < 1) return rep;
  {
    IntPoly g = int_poly_gcd(f, derivative(f));
    if (g.degree() >= 1) {
      f = divide_exact(f, g);
      make_primitive(f);
    }
  }
  if (f.c.back() < 0)
    for (Int& x : f.c) x = -x;
  const IntPoly sq_full = f;  // squarefree part, positive leading; endpoint signs refer to it

  std::vector<Rational> peeled;
  while (!f.c.empty() && f.c.front() == 0) {
    peeled.push_back(Rational(0));
    f.c.erase(f.c.begin());
  }
  // small integer roots come off by exact division, so values like 2 or 3
  // are reported exactly rather than as brackets
  constexpr long kIntegerScan = 16;
  for (long cand = 1; cand <= kIntegerScan && f.degree() >= 1; ++cand) {
    for (long root : {cand, -cand}) {
      while (f.degree() >= 1 && sign_at(f, Rational(root)) == 0) {
        f = divide_out_root(f, Rational(root));
        peeled.push_back(Rational(root));
      }
    }
  }

  // Sturm bisection on what is left; a rational root discovered at a midpoint
  // is divided out and the isolation restarts with it as a grid point.
  while (f.degree() >= 1) {
    rep.intervals.clear();
    detail::SturmChain chain = detail::make_sturm_chain(f);
    const Rational bound = detail::dyadic_upper_bound(cauchy_root_bound(f));

    std::vector<Rational> grid;
    grid.push_back(Rational(-bound));
    {
      std::vector<Rational> inner(peeled);
      inner.push_back(Rational(0));
      std::sort(inner.begin(), inner.end());
      inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
      for (const Rational& g : inner)
        if (-bound < g && g < bound) grid.push_back(g);
    }
    grid.push_back(bound);

    std::optional<Rational> hit;
    struct Seg {
      Rational a, b;
      int va, vb;
    };
    // Endpoints that coincide with already-peeled roots are roots of the full
    // squarefree part, so slide them inward (keeping the isolated root
    // bracketed) before recording an interval.
    auto nudge_inward = [&](Rational& pt, const Rational& other) {
      if (sign_at(sq_full, pt) != 0) return;
      const int side_sign = sign_at(f, pt);
      Rational step((other - pt) / 4);
      for (;;) {
        Rational cand(pt + step);
        if (sign_at(f, cand) == side_sign) {
          pt = std::move(cand);
          return;
        }
        step /= 2;
      }
    };
    auto emit = [&](Rational a, Rational b) {
      nudge_inward(a, b);
      nudge_inward(b, a);
      const int sa = sign_at(sq_full, a);
      const int sb = sign_at(sq_full, b);
      rep.intervals.push_back({std::move(a), std::move(b), sa, sb});
    };
    std::vector<Seg> stack;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      Seg s{grid[i], grid[i + 1], detail::variations_at(chain, grid[i]),
            detail::variations_at(chain, grid[i + 1])};
      if (s.va - s.vb > 0) stack.push_back(std::move(s));
    }
    while (!stack.empty() && !hit) {
      Seg s = std::move(stack.back());
      stack.pop_back();
      const long count = s.va - s.vb;
      if (count <= 0) continue;
      if (count == 1) {
        emit(s.a, s.b);
        continue;
      }
      Rational mid((s.a + s.b) / 2);
      if (sign_at(f, mid) == 0) {
        hit = mid;
        break;
      }
      const int vm = detail::variations_at(chain, mid);
      if (s.va - vm > 0) stack.push_back({s.a, mid, s.va, vm});
      if (vm - s.vb > 0) stack.push_back({mid, s.b, vm, s.vb});
    }
    if (!hit) break;
    f = divide_out_root(f, *hit);
    peeled.push_back(*hit);
  }

  rep.exact_roots = std::move(peeled);
  std::sort(rep.exact_roots.begin(), rep.exact_roots.end());
  std::sort(rep.intervals.begin(), rep.intervals.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  for (const RootInterval& iv : rep.intervals) {
    Rational w = iv.width();
    if (w > rep.precision) rep.precision = w;
  }
  return rep;
}

/// Shrinks an isolating interval to width <= eps by exact sign bisection on
/// the squarefree part. The same root stays bracketed throughout; a midpoint
/// that happens to be the root exactly yields a tight bracket around it.
inline RootInterval refine(const Poly& p, RootInterval iv, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("refine: eps must be positive");
  if (!(iv.lo < iv.hi)) throw std::invalid_argument("refine: empty interval");
  const IntPoly f = to_int_poly(squarefree_part(p));
  const int slo = sign_at(f, iv.lo);
  const int shi = sign_at(f, iv.hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("refine: interval does not bracket a simple root");
  iv.sign_lo = slo;
  iv.sign_hi = shi;
  while (iv.hi - iv.lo > eps) {
    Rational mid((iv.lo + iv.hi) / 2);
    const int sm = sign_at(f, mid);
    if (sm == 0) {
      // landed on the root; shrink symmetrically around it
      Rational w(eps / 4);
      for (;;) {
        Rational lo(mid - w), hi(mid + w);
        if (sign_at(f, lo) == slo && sign_at(f, hi) == shi) return {lo, hi, slo, shi};
        w /= 2;
      }
    }
    if (sm == slo)
      iv.lo = std::move(mid);
    else
      iv.hi = std::move(mid);
  }
  return iv;
}

/// Midpoint (or exact value) of the largest real root > 0, refined to width
/// 1e-12; std::nullopt when p has no positive real root.
inline std::optional<Rational> largest_positive_real_root(const Poly& p) {
  const RootReport rep = isolate_real_roots(p);
  std::optional<Rational> best_exact;
  for (const Rational& r : rep.exact_roots)
    if (r > 0) best_exact = r;  // sorted ascending
  const RootInterval* best_iv = nullptr;
  for (const RootInterval& iv : rep.intervals)
    if (iv.lo >= 0) best_iv = &iv;  // isolation always splits at 0
  if (!best_iv) return best_exact;
  if (best_exact && *best_exact >= best_iv->hi) return best_exact;
  static const Rational kEps = make_rational(Int(1), pow10(12));
  const RootInterval r = refine(p, *best_iv, kEps);
  return r.midpoint();
}

/// Exact number of distinct real roots in the open interval (c, +inf).
/// Fast path: Descartes' rule on the shifted polynomial decides counts 0 and
/// 1 outright; otherwise an exact Sturm count settles it.
inline long count_real_roots_above(const Poly& p, long c) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots_above: zero polynomial");
  IntPoly f = to_int_poly(p);
  if (f.degree() < 1) return 0;
  IntPoly g = taylor_shift(f, Int(c));
  while (!g.c.empty() && g.c.front() == 0) g.c.erase(g.c.begin());  // roots exactly at c
  const int v = sign_variations(g);
  if (v <= 1) return v;
  detail::SturmChain chain = detail::make_sturm_chain(std::move(f));
  return detail::variations_at(chain, Rational(c)) - detail::variations_at_pos_inf(chain);
}

/// Total number of distinct real roots.
inline long count_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  IntPoly f = to_int_poly(p);
  if (f.degree() < 1) return 0;
  detail::SturmChain chain = detail::make_sturm_chain(std::move(f));
  return detail::variations_at_neg_inf(chain) - detail::variations_at_pos_inf(chain);
}

}  // namespace partpoly
