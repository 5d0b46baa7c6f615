#pragma once

#include "partpoly/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace partpoly {

/// Integer-coefficient polynomial used by the exact root machinery.
/// Same layout convention as Poly: ascending coefficients, empty == zero.
struct IntPoly {
  std::vector<Int> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

inline Int content(const IntPoly& f) {
  Int g(0);
  for (const Int& x : f.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // >= 0; zero only for the zero polynomial
}

/// Divides out the positive content; leading-coefficient sign is preserved.
inline void make_primitive(IntPoly& f) {
  Int g = content(f);
  if (g > 1)
    for (Int& x : f.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Clears denominators and strips content: the result is a positive rational
/// multiple of p, so it has the same roots and the same sign everywhere.
inline IntPoly to_int_poly(const Poly& p) {
  IntPoly f;
  if (p.is_zero()) return f;
  Int l(1);
  for (const Rational& q : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  f.c.resize(p.coeffs().size());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    const Rational& q = p.coeffs()[i];
    f.c[i] = q.get_num() * (l / q.get_den());
  }
  make_primitive(f);
  return f;
}

inline Poly to_poly(const IntPoly& f) {
  std::vector<Rational> c(f.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(f.c[i]);
  return Poly(std::move(c));
}

inline IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  if (f.c.size() <= 1) return d;
  d.c.resize(f.c.size() - 1);
  for (std::size_t i = 1; i < f.c.size(); ++i) d.c[i - 1] = static_cast<long>(i) * f.c[i];
  d.normalize();
  return d;
}

/// Number of sign changes in the coefficient sequence (zeros skipped) --
/// Descartes' bound on the positive real roots, exact when 0 or 1.
inline int sign_variations(const IntPoly& f) {
  int changes = 0, prev = 0;
  for (const Int& x : f.c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

/// Exact sign of f at the rational point x = u/v (v > 0), via the homogeneous
/// value sum_i c_i u^i v^{d-i}.
inline int sign_at(const IntPoly& f, const Rational& x) {
  if (f.is_zero()) return 0;
  const Int& u = x.get_num();
  const Int& v = x.get_den();
  const int d = f.degree();
  if (v == 1) {
    Int acc(0);
    for (int i = d; i >= 0; --i) {
      acc *= u;
      acc += f.c[i];
    }
    return sgn(acc);
  }
  Int acc(0);
  Int vpow(1);  // v^(d-i) built alongside the Horner loop in u
  acc = f.c[d];
  for (int i = d - 1; i >= 0; --i) {
    vpow *= v;
    acc *= u;
    acc += f.c[i] * vpow;
  }
  return sgn(acc);
}

/// f(x + t) for integer t, by the in-place Horner shift.
inline IntPoly taylor_shift(IntPoly f, const Int& t) {
  const int d = f.degree();
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) f.c[j] += t * f.c[j + 1];
  f.normalize();
  return f;
}

/// Remainder of a by b scaled by some positive integer: repeatedly replaces
/// a with |lc(b)|*a - sgn(lc(b))*lc(a)*x^k*b, so every step multiplies the
/// true remainder by a positive factor and the final sign pattern matches
/// rem(a, b).
inline IntPoly signed_pseudo_rem(IntPoly a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("signed_pseudo_rem: zero divisor");
  const int db = b.degree();
  const Int& lb = b.c.back();
  const Int albs = abs(lb);
  const int slb = sgn(lb);
  while (!a.is_zero() && a.degree() >= db) {
    const int da = a.degree();
    const Int ca = a.c.back();
    for (Int& x : a.c) x *= albs;
    const int off = da - db;
    if (slb > 0)
      for (int j = 0; j <= db; ++j) a.c[off + j] -= ca * b.c[j];
    else
      for (int j = 0; j <= db; ++j) a.c[off + j] += ca * b.c[j];
    a.normalize();
  }
  return a;
}

/// Primitive gcd with positive leading coefficient.
inline IntPoly int_poly_gcd(IntPoly a, IntPoly b) {
  a.normalize();
  b.normalize();
  make_primitive(a);
  make_primitive(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = signed_pseudo_rem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.c.back() < 0)
    for (Int& x : a.c) x = -x;
  return a;
}

/// Exact quotient num/den over the integers; throws std::logic_error if the
/// division is not exact (it always is for primitive/primitive factors).
inline IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  IntPoly q;
  if (num.is_zero()) return q;
  const int dd = den.degree();
  if (num.degree() < dd) throw std::logic_error("divide_exact: degree mismatch");
  IntPoly r = num;
  q.c.assign(static_cast<std::size_t>(num.degree() - dd) + 1, Int(0));
  const Int& ld = den.c.back();
  for (int k = num.degree() - dd; k >= 0; --k) {
    const int dr = r.degree();
    if (dr < dd + k) continue;
    if (mpz_divisible_p(r.c[dr].get_mpz_t(), ld.get_mpz_t()) == 0)
      throw std::logic_error("divide_exact: not divisible");
    Int t;
    mpz_divexact(t.get_mpz_t(), r.c[dr].get_mpz_t(), ld.get_mpz_t());
    for (int j = 0; j <= dd; ++j) r.c[k + j] -= t * den.c[j];
    r.normalize();
    q.c[k] = std::move(t);
  }
  if (!r.is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
  q.normalize();
  return q;
}

/// Divides out a known rational root r (f(r) == 0): synthetic division over
/// the rationals, then renormalized to a primitive integer polynomial.
inline IntPoly divide_out_root(const IntPoly& f, const Rational& r) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("divide_out_root: degree must be >= 1");
  std::vector<Rational> q(static_cast<std::size_t>(d));
  Rational carry(f.c[d]);
  for (int i = d - 1; i >= 0; --i) {
    q[i] = carry;
    carry *= r;
    carry += f.c[i];
  }
  if (carry != 0) throw std::logic_error("divide_out_root: not a root");
  return to_int_poly(Poly(std::move(q)));
}

/// Cauchy bound: every real root has |root| < 1 + max|c_i| / |lead|.
inline Rational cauchy_root_bound(const IntPoly& f) {
  if (f.degree() < 1) return Rational(1);
  Int mx(0);
  for (int i = 0; i < f.degree(); ++i) {
    Int a = abs(f.c[i]);
    if (a > mx) mx = a;
  }
  return Rational(1) + make_rational(mx, abs(f.c.back()));
}

}  // namespace partpoly
