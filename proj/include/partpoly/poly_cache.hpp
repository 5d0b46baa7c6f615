#pragma once

#include "partpoly/poly.hpp"
#include "partpoly/sigma.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace partpoly {

/// Immutable table of the partition polynomials P_0..P_max_n.
///
/// P_0 = 1 and P_n(x) = (x/n) * sum_{k=1..n} sigma(k) P_{n-k}(x). For every
/// positive integer k, P_n(k) is the number of k-colored partitions of n.
///
/// Construction works on integer coefficients of n!*P_n and converts to
/// Rational once at the end; the recurrence only ever divides by n!, so this
/// avoids a gcd reduction per intermediate coefficient. The finished cache is
/// immutable and safe to share across threads.
class PolyCache {
 public:
  explicit PolyCache(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw std::invalid_argument("PolyCache: max_n must be >= 0");
    sigma_ = sigma_values(static_cast<std::size_t>(max_n));

    factorial_.resize(max_n + 1);
    factorial_[0] = 1;
    for (int n = 1; n <= max_n; ++n) factorial_[n] = factorial_[n - 1] * n;

    std::vector<std::vector<Int>> scaled(max_n + 1);  // scaled[n] = n! * P_n
    scaled[0] = {Int(1)};
    for (int n = 1; n <= max_n; ++n) {
      std::vector<Int> acc(n);  // (n-1)! * sum_k sigma(k) P_{n-k}, degree n-1
      Int rising(1);            // (n-1)!/(n-k)!
      for (int k = 1; k <= n; ++k) {
        Int f = rising * static_cast<unsigned long>(sigma_[k]);
        const std::vector<Int>& s = scaled[n - k];
        for (std::size_t i = 0; i < s.size(); ++i) acc[i] += f * s[i];
        if (k < n) rising *= (n - k);
      }
      std::vector<Int>& sn = scaled[n];
      sn.resize(n + 1);
      for (int i = 0; i < n; ++i) sn[i + 1] = std::move(acc[i]);
    }

    polys_.resize(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
      std::vector<Rational> c(scaled[n].size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = make_rational(scaled[n][i], factorial_[n]);
      polys_[n] = Poly(std::move(c));
    }
  }

  int max_n() const { return max_n_; }

  const Poly& poly(int n) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("PolyCache::poly: index out of range");
    return polys_[n];
  }

  std::uint64_t sigma_at(int k) const {
    if (k < 1 || k > max_n_) throw std::out_of_range("PolyCache::sigma_at: index out of range");
    return sigma_[k];
  }

  const Int& factorial(int n) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("PolyCache::factorial: index out of range");
    return factorial_[n];
  }

 private:
  int max_n_;
  std::vector<Poly> polys_;
  std::vector<std::uint64_t> sigma_;
  std::vector<Int> factorial_;
};

inline PolyCache build_cache(int max_n) { return PolyCache(max_n); }

/// Difference polynomial P_{n+1} - P_n.
inline Poly delta(const PolyCache& cache, int n) {
  if (n < 1 || n + 1 > cache.max_n()) throw std::out_of_range("delta: need 1 <= n, n+1 <= max_n");
  return cache.poly(n + 1) - cache.poly(n);
}

/// P_a * P_b - P_{a+b}. Its positive real root marks where p_{-x}(a) p_{-x}(b)
/// overtakes p_{-x}(a+b).
inline Poly bo_poly(const PolyCache& cache, int a, int b) {
  if (a < 1 || b < 1 || a + b > cache.max_n())
    throw std::out_of_range("bo_poly: need a, b >= 1 and a+b <= max_n");
  return cache.poly(a) * cache.poly(b) - cache.poly(a + b);
}

/// The normalized cofactor of P_n: P_n(x) = x/n! * tilde(x) with tilde monic
/// of degree n-1 and all coefficients positive integers. Throws
/// std::runtime_error if that structure ever fails to hold.
inline Poly tilde_poly(const PolyCache& cache, int n) {
  if (n < 1 || n > cache.max_n()) throw std::out_of_range("tilde_poly: need 1 <= n <= max_n");
  const Poly& p = cache.poly(n);
  if (p.coeff(0) != 0) throw std::runtime_error("tilde_poly: constant term of P_n is nonzero");
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) {
    Rational v = p.coeffs()[i] * cache.factorial(n);
    if (v.get_den() != 1 || v <= 0)
      throw std::runtime_error("tilde_poly: coefficient structure violated");
    c[i - 1] = std::move(v);
  }
  Poly tilde(std::move(c));
  if (tilde.is_zero() || tilde.leading() != 1) throw std::runtime_error("tilde_poly: not monic");
  return tilde;
}

/// P_n'(x) as the divisor-weighted sum sum_{k=1..n} sigma(k)/k * P_{n-k}(x).
/// Agrees with the formal derivative of P_n identically.
inline Poly derivative_formula(const PolyCache& cache, int n) {
  if (n < 1 || n > cache.max_n())
    throw std::invalid_argument("derivative_formula: need 1 <= n <= max_n");
  Poly acc;
  for (int k = 1; k <= n; ++k) {
    Rational w = make_rational(Int(static_cast<unsigned long>(cache.sigma_at(k))), Int(k));
    acc = acc + w * cache.poly(n - k);
  }
  return acc;
}

}  // namespace partpoly
