#pragma once

#include "partpoly/root_isolation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace partpoly {

struct FloatRoot {
  std::complex<double> value;
  double residual = 0.0;  // |monic(value)| at the returned point
  bool converged = false;
};

/// All complex roots of the squarefree part, by Aberth-Ehrlich simultaneous
/// iteration on the monic double-precision coefficients. Deterministic
/// (fixed starting configuration), iteration cap 500; roots that fail to
/// settle are returned with converged == false rather than failing the call.
inline std::vector<FloatRoot> all_roots_float(const Poly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("all_roots_float: degree must be >= 1");
  const Poly sq = squarefree_part(p);
  const int d = sq.degree();

  std::vector<double> monic(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    Rational c(sq.coeffs()[i] / sq.leading());
    monic[i] = to_double(c);
    if (!std::isfinite(monic[i]))
      throw std::overflow_error("all_roots_float: coefficients exceed double range");
  }
  monic[d] = 1.0;

  std::vector<FloatRoot> out;
  int low = 0;
  while (low < d && monic[low] == 0.0) ++low;
  for (int i = 0; i < low; ++i) out.push_back({{0.0, 0.0}, 0.0, true});

  const int n = d - low;
  if (n == 0) return out;
  std::vector<double> a(monic.begin() + low, monic.end());

  // Fujiwara-style radius, well inside the double range for our degrees
  double radius = 0.0;
  for (int i = 0; i < n; ++i)
    if (a[i] != 0.0) radius = std::max(radius, std::pow(std::abs(a[i]), 1.0 / (n - i)));
  radius = 2.0 * radius;
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;

  std::vector<std::complex<double>> z(n);
  for (int j = 0; j < n; ++j) {
    // fixed angular offset keeps the start configuration off the real axis
    const double theta = 2.0 * std::numbers::pi_v<double> * j / n + 0.403;
    z[j] = std::polar(0.7 * radius, theta);
  }

  // Horner value, derivative, and a running bound on the evaluation roundoff;
  // once |p(z)| drops under that bound the value is numerically zero and the
  // point cannot be improved at double precision.
  auto eval = [&](std::complex<double> x, std::complex<double>& val, std::complex<double>& der,
                  double& noise) {
    const double ax = std::abs(x);
    val = a[n];
    der = 0.0;
    noise = std::abs(a[n]);
    for (int i = n - 1; i >= 0; --i) {
      der = der * x + val;
      val = val * x + a[i];
      noise = noise * ax + std::abs(a[i]);
    }
    noise *= 8.0 * std::numeric_limits<double>::epsilon();
  };

  constexpr int kMaxIter = 500;
  constexpr double kStepTol = 1e-10;
  std::vector<bool> settled(static_cast<std::size_t>(n), false);
  for (int it = 0; it < kMaxIter; ++it) {
    bool all_settled = true;
    for (int j = 0; j < n; ++j) {
      if (settled[j]) continue;
      std::complex<double> v, dv;
      double noise;
      eval(z[j], v, dv, noise);
      if (std::abs(v) <= noise) {
        settled[j] = true;
        continue;
      }
      if (std::abs(dv) == 0.0) {
        z[j] += std::complex<double>(1e-8, 1e-8);
        all_settled = false;
        continue;
      }
      const std::complex<double> newton = v / dv;
      std::complex<double> repulsion = 0.0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        std::complex<double> dz = z[j] - z[k];
        if (std::abs(dz) < 1e-300) dz = std::complex<double>(1e-12, 1e-12);
        repulsion += 1.0 / dz;
      }
      const std::complex<double> denom = 1.0 - newton * repulsion;
      const std::complex<double> step = std::abs(denom) > 1e-300 ? newton / denom : newton;
      z[j] -= step;
      if (std::abs(step) <= kStepTol * std::max(1.0, std::abs(z[j])))
        settled[j] = true;
      else
        all_settled = false;
    }
    if (all_settled) break;
  }

  for (int j = 0; j < n; ++j) {
    std::complex<double> v, dv;
    double noise;
    eval(z[j], v, dv, noise);
    out.push_back({z[j], std::abs(v), settled[j]});
  }
  std::sort(out.begin(), out.end(), [](const FloatRoot& x, const FloatRoot& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return out;
}

}  // namespace partpoly
