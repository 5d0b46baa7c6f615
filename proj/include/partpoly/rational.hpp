#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace partpoly {

using Int = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form (lowest terms, positive denominator).
inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Int(num), Int(den));
}

inline Int pow10(unsigned long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

/// Parses "p/q", plain integers, and decimal strings ("-1.25", "2.5e-3").
/// All forms convert exactly; throws std::invalid_argument on junk.
inline Rational parse_rational(std::string_view sv) {
  const std::string s(sv);
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
  };
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string nums = s.substr(0, slash), dens = s.substr(slash + 1);
    if (nums.empty() || dens.empty()) return fail();
    Int num, den;
    if (num.set_str(nums, 10) != 0 || den.set_str(dens, 10) != 0) return fail();
    if (den == 0) return fail();
    return make_rational(num, den);
  }

  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = (s[pos++] == '-');
  std::string digits;
  long frac_digits = 0;
  long exponent = 0;
  bool any = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    digits += s[pos++];
    any = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      ++frac_digits;
      any = true;
    }
  }
  if (!any) return fail();
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) eneg = (s[pos++] == '-');
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return fail();
    long e = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      e = 10 * e + (s[pos++] - '0');
      if (e > 1000000) return fail();
    }
    exponent = eneg ? -e : e;
  }
  if (pos != s.size()) return fail();

  Int num(digits);
  if (neg) num = -num;
  const long net = exponent - frac_digits;
  if (net >= 0) return Rational(num * pow10(static_cast<unsigned long>(net)));
  return make_rational(num, pow10(static_cast<unsigned long>(-net)));
}

/// Fixed-point decimal rendering, round half away from zero.
inline std::string to_fixed_decimal(const Rational& q, unsigned digits) {
  Int num = q.get_num();
  const Int den = q.get_den();
  const bool neg = num < 0;
  if (neg) num = -num;
  num *= pow10(digits);
  Int quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) quot += 1;
  std::string str = quot.get_str();
  if (digits > 0) {
    if (str.size() <= digits) str.insert(0, std::string(digits + 1 - str.size(), '0'));
    str.insert(str.size() - digits, ".");
  }
  if (neg && quot != 0) str.insert(0, "-");
  return str;
}

/// Exact conversion of a finite double.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  return Rational(x);
}

/// Nearest-double image of q; +-inf when out of range.
inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace partpoly
