#pragma once

#include "partpoly/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partpoly {

/// Dense univariate polynomial over Rational.
///
/// Coefficients are stored in ascending degree order. The zero polynomial is
/// the empty coefficient vector; otherwise the last coefficient is nonzero,
/// so degree() == coeffs().size() - 1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Poly constant(Rational c) {
    std::vector<Rational> v;
    v.push_back(std::move(c));
    return Poly(std::move(v));
  }
  static Poly monomial(std::size_t degree, Rational coeff) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(coeff);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(1, Rational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the stored degree.
  const Rational& coeff(std::size_t i) const {
    static const Rational zero;
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }

  const Rational& leading() const {
    if (is_zero()) throw std::logic_error("Poly::leading: zero polynomial");
    return coeffs_.back();
  }

  Poly operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return Poly(std::move(c));
  }

  /// Formal derivative.
  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = static_cast<long>(i) * coeffs_[i];
    return Poly(std::move(c));
  }

  /// Exact Horner evaluation.
  Rational operator()(const Rational& x) const {
    Rational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc *= x;
      acc += coeffs_[i];
    }
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
      if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
    }
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> c(p.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.coeffs_[i];
    return Poly(std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string(std::string_view var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      const bool first = out.empty();
      Rational abs_c = c < 0 ? Rational(-c) : c;
      if (!first) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      std::string mag = abs_c.get_str();
      if (i == 0) {
        out += mag;
      } else {
        if (abs_c != 1) {
          out += mag;
          out += "*";
        }
        out += var;
        if (i > 1) {
          out += "^";
          out += std::to_string(i);
        }
      }
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// Evaluates p exactly at the dyadic rational equal to x, then rounds the
/// exact value to double. Never runs Horner in floating point, so there is
/// no cancellation error; throws std::overflow_error if the value leaves the
/// double range.
inline double eval_double(const Poly& p, double x) {
  const Rational exact = p(rational_from_double(x));
  const double out = to_double(exact);
  if (!std::isfinite(out)) throw std::overflow_error("eval_double: value exceeds double range");
  return out;
}

}  // namespace partpoly
