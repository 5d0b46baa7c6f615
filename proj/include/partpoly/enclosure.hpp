#pragma once

#include "partpoly/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace partpoly {

/// Closed interval [lo, hi] with mpfr endpoints. Every operation rounds the
/// lower endpoint down and the upper endpoint up, so the mathematical value
/// of a composed expression is guaranteed to stay inside; strict interval
/// comparisons are therefore rigorous, not float-lucky.
class Enclosure {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 128;

  explicit Enclosure(mpfr_prec_t prec = kDefaultPrec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Enclosure(const Enclosure& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Enclosure(Enclosure&& o) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Enclosure& operator=(Enclosure o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }
  ~Enclosure() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Enclosure from_integer(long v, mpfr_prec_t prec = kDefaultPrec) {
    Enclosure e(prec);
    mpfr_set_si(e.lo_, v, MPFR_RNDD);
    mpfr_set_si(e.hi_, v, MPFR_RNDU);
    return e;
  }
  static Enclosure from_int(const Int& v, mpfr_prec_t prec = kDefaultPrec) {
    Enclosure e(prec);
    mpfr_set_z(e.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(e.hi_, v.get_mpz_t(), MPFR_RNDU);
    return e;
  }
  static Enclosure from_rational(const Rational& q, mpfr_prec_t prec = kDefaultPrec) {
    Enclosure e(prec);
    mpfr_set_q(e.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(e.hi_, q.get_mpq_t(), MPFR_RNDU);
    return e;
  }
  static Enclosure pi(mpfr_prec_t prec = kDefaultPrec) {
    Enclosure e(prec);
    mpfr_const_pi(e.lo_, MPFR_RNDD);
    mpfr_const_pi(e.hi_, MPFR_RNDU);
    return e;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double midpoint_double() const {
    MPFR_DECL_INIT(mid, 64);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    return mpfr_get_d(mid, MPFR_RNDN);
  }

  bool is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }
  bool strictly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool strictly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

  bool entirely_less(const Enclosure& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
  bool entirely_greater(const Enclosure& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }
  /// hi < q, exact mpfr/rational comparison.
  bool entirely_below(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }
  /// lo > q.
  bool entirely_above(const Rational& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0; }
  bool contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
  }

  friend Enclosure operator+(const Enclosure& x, const Enclosure& y) {
    Enclosure r(joint_prec(x, y));
    mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
  }
  friend Enclosure operator-(const Enclosure& x, const Enclosure& y) {
    Enclosure r(joint_prec(x, y));
    mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
    return r;
  }
  friend Enclosure operator-(const Enclosure& x) {
    Enclosure r(x.precision());
    mpfr_neg(r.lo_, x.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
    return r;
  }
  friend Enclosure operator*(const Enclosure& x, const Enclosure& y) {
    Enclosure r(joint_prec(x, y));
    mpfr_t t;
    mpfr_init2(t, r.precision());
    mpfr_mul(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_mul(t, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, x.hi_, y.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, x.hi_, y.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(r.hi_, x.lo_, y.lo_, MPFR_RNDU);
    mpfr_mul(t, x.lo_, y.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, x.hi_, y.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, x.hi_, y.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
  }
  friend Enclosure operator/(const Enclosure& x, const Enclosure& y) {
    if (y.contains_zero()) throw std::domain_error("Enclosure: division by interval containing 0");
    Enclosure r(joint_prec(x, y));
    mpfr_t t;
    mpfr_init2(t, r.precision());
    mpfr_div(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_div(t, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, x.hi_, y.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, x.hi_, y.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, x.lo_, y.lo_, MPFR_RNDU);
    mpfr_div(t, x.lo_, y.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, x.hi_, y.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, x.hi_, y.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
  }

  static Enclosure sqrt(const Enclosure& x) {
    if (mpfr_sgn(x.lo_) < 0) throw std::domain_error("Enclosure::sqrt: negative interval");
    Enclosure r(x.precision());
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }
  static Enclosure cbrt(const Enclosure& x) {
    Enclosure r(x.precision());
    mpfr_cbrt(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_cbrt(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }
  static Enclosure exp(const Enclosure& x) {
    Enclosure r(x.precision());
    mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }
  static Enclosure log(const Enclosure& x) {
    if (mpfr_sgn(x.lo_) <= 0) throw std::domain_error("Enclosure::log: non-positive interval");
    Enclosure r(x.precision());
    mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }
  static Enclosure sinh(const Enclosure& x) {
    Enclosure r(x.precision());
    mpfr_sinh(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_sinh(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }

  /// Midpoint with the given number of significant digits.
  std::string to_string(int sig_digits = 17) const {
    mpfr_t mid;
    mpfr_init2(mid, precision());
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    char buf[256];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", sig_digits, mid);
    mpfr_clear(mid);
    return buf;
  }

 private:
  static mpfr_prec_t joint_prec(const Enclosure& x, const Enclosure& y) {
    return std::max(x.precision(), y.precision());
  }
  mpfr_t lo_, hi_;
};

}  // namespace partpoly
