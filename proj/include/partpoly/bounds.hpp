#pragma once

#include "partpoly/enclosure.hpp"
#include "partpoly/poly_cache.hpp"

#include <stdexcept>

namespace partpoly {

inline constexpr mpfr_prec_t kBoundsStartPrec = 128;  // ~38 decimal digits
inline constexpr mpfr_prec_t kBoundsMaxPrec = mpfr_prec_t{1} << 14;

namespace detail {

/// Runs a comparison at escalating precision until it is strict one way or
/// the other. Both sides must not be equal as real numbers (in this module
/// one side is always rational and the other transcendental), so this
/// terminates; the throw is a safety net, never an expected path.
template <class LhsFn, class RhsFn>
bool certified_greater(LhsFn&& lhs_at, RhsFn&& rhs_at) {
  for (mpfr_prec_t prec = kBoundsStartPrec; prec <= kBoundsMaxPrec; prec *= 2) {
    const Enclosure lhs = lhs_at(prec);
    const Enclosure rhs = rhs_at(prec);
    if (lhs.entirely_greater(rhs)) return true;
    if (lhs.entirely_less(rhs)) return false;
  }
  throw std::runtime_error("certified_greater: undecided at maximum precision");
}

}  // namespace detail

/// mu(n) = (pi/6) sqrt(24n - 1).
inline Enclosure mu(long n, mpfr_prec_t prec = kBoundsStartPrec) {
  if (n < 1) throw std::invalid_argument("mu: n must be >= 1");
  const Enclosure root = Enclosure::sqrt(Enclosure::from_integer(24 * n - 1, prec));
  return Enclosure::pi(prec) * root / Enclosure::from_integer(6, prec);
}

/// Two-sided estimate for p(m) from the one-term truncation of the partition
/// asymptotics: (sqrt(3)/12m)(1 -+ 1/sqrt(m)) e^{mu(m)}. At m = 1 the lower
/// side degenerates to exactly 0.
struct BoundPair {
  Enclosure lower, upper;
  long m = 0;
};

inline BoundPair bo2_bounds(long m, mpfr_prec_t prec = kBoundsStartPrec) {
  if (m < 1) throw std::invalid_argument("bo2_bounds: m must be >= 1");
  const Enclosure one = Enclosure::from_integer(1, prec);
  const Enclosure prefactor =
      Enclosure::sqrt(Enclosure::from_integer(3, prec)) / Enclosure::from_integer(12 * m, prec);
  const Enclosure inv_sqrt_m = one / Enclosure::sqrt(Enclosure::from_integer(m, prec));
  const Enclosure growth = Enclosure::exp(mu(m, prec));
  BoundPair out;
  out.lower = prefactor * (one - inv_sqrt_m) * growth;
  out.upper = prefactor * (one + inv_sqrt_m) * growth;
  out.m = m;
  return out;
}

/// Truncation-error bound for the N-term partition series:
/// (pi^2 N^{-2/3} / sqrt(3)) ((N/mu)^3 sinh(mu/N) + 1/6 - (N/mu)^2).
inline Enclosure lehmer_error_bound(long n, long N, mpfr_prec_t prec = kBoundsStartPrec) {
  if (n < 1 || N < 1) throw std::invalid_argument("lehmer_error_bound: n, N must be >= 1");
  const Enclosure mu_n = mu(n, prec);
  const Enclosure big_n = Enclosure::from_integer(N, prec);
  const Enclosure ratio = big_n / mu_n;
  const Enclosure ratio2 = ratio * ratio;
  const Enclosure pi_e = Enclosure::pi(prec);
  const Enclosure prefactor =
      pi_e * pi_e /
      (Enclosure::cbrt(Enclosure::from_int(Int(N) * Int(N), prec)) *
       Enclosure::sqrt(Enclosure::from_integer(3, prec)));
  const Enclosure sixth = Enclosure::from_rational(make_rational(1, 6), prec);
  return prefactor * (ratio2 * ratio * Enclosure::sinh(mu_n / big_n) + sixth - ratio2);
}

/// e^{pi sqrt(a)/3} > (1 + ln 2a)(1 + a) * 2 / (1 - 1/sqrt(a)).
/// This growth inequality kicks in at a = 34 and stays true afterwards.
inline bool wachstum_holds(long a) {
  if (a <= 1) throw std::invalid_argument("wachstum_holds: requires a >= 2");
  return detail::certified_greater(
      [a](mpfr_prec_t prec) {
        return Enclosure::exp(Enclosure::pi(prec) * Enclosure::sqrt(Enclosure::from_integer(a, prec)) /
                              Enclosure::from_integer(3, prec));
      },
      [a](mpfr_prec_t prec) {
        const Enclosure one = Enclosure::from_integer(1, prec);
        const Enclosure numer = (one + Enclosure::log(Enclosure::from_integer(2 * a, prec))) *
                                Enclosure::from_integer(1 + a, prec) *
                                Enclosure::from_integer(2, prec);
        const Enclosure denom = one - one / Enclosure::sqrt(Enclosure::from_integer(a, prec));
        return numer / denom;
      });
}

/// P_n(2) >= (13/4)(1 + ln 2n). The right side is irrational, so the exact
/// rational left side decides the comparison at some finite precision.
inline bool eq_n1_holds(const PolyCache& cache, int n) {
  if (n < 1 || n > cache.max_n()) throw std::out_of_range("eq_n1_holds: n out of cache range");
  const Rational lhs = cache.poly(n)(Rational(2));
  for (mpfr_prec_t prec = kBoundsStartPrec; prec <= kBoundsMaxPrec; prec *= 2) {
    const Enclosure rhs =
        Enclosure::from_rational(make_rational(13, 4), prec) *
        (Enclosure::from_integer(1, prec) + Enclosure::log(Enclosure::from_integer(2L * n, prec)));
    if (rhs.entirely_below(lhs)) return true;
    if (rhs.entirely_above(lhs)) return false;
  }
  throw std::runtime_error("eq_n1_holds: undecided at maximum precision");
}

/// P_n(x) - (1 + ln 2n) > 0 at a rational point x.
inline bool hilfs_holds(const PolyCache& cache, int n, const Rational& x) {
  if (n < 1 || n > cache.max_n()) throw std::out_of_range("hilfs_holds: n out of cache range");
  const Rational lhs = cache.poly(n)(x);
  for (mpfr_prec_t prec = kBoundsStartPrec; prec <= kBoundsMaxPrec; prec *= 2) {
    const Enclosure rhs =
        Enclosure::from_integer(1, prec) + Enclosure::log(Enclosure::from_integer(2L * n, prec));
    if (rhs.entirely_below(lhs)) return true;
    if (rhs.entirely_above(lhs)) return false;
  }
  throw std::runtime_error("hilfs_holds: undecided at maximum precision");
}

/// Certifies lower(m) < p_m < upper(m) with outward-rounded bounds,
/// escalating precision until strict on both sides.
inline bool bo2_sandwich_certified(long m, const Int& p_m) {
  const Rational value(p_m);
  for (mpfr_prec_t prec = kBoundsStartPrec; prec <= kBoundsMaxPrec; prec *= 2) {
    const BoundPair b = bo2_bounds(m, prec);
    if (b.lower.entirely_below(value) && b.upper.entirely_above(value)) return true;
    if (b.lower.entirely_above(value) || b.upper.entirely_below(value)) return false;
  }
  throw std::runtime_error("bo2_sandwich_certified: undecided at maximum precision");
}

}  // namespace partpoly
