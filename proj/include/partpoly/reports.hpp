#pragma once

#include "partpoly/float_roots.hpp"
#include "partpoly/verify.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace partpoly {

/// Grid of the positive real roots of P_a P_b - P_{a+b}, two decimals,
/// round half away from zero. "NA" marks a polynomial without positive roots.
inline std::string table1_csv(const PolyCache& cache, int amax, int bmax) {
  std::string out = "a,b,root\n";
  for (int a = 1; a <= amax; ++a)
    for (int b = 1; b <= bmax; ++b) {
      const std::optional<Rational> root = largest_positive_real_root(bo_poly(cache, a, b));
      out += std::to_string(a);
      out += ",";
      out += std::to_string(b);
      out += ",";
      out += root ? to_fixed_decimal(*root, 2) : std::string("NA");
      out += "\n";
    }
  return out;
}

/// Positive real root of P_a P_1 - P_{a+1} for 1 <= a <= amax, 12 decimals.
inline std::string figure2_csv(const PolyCache& cache, int amax) {
  std::string out = "a,root\n";
  for (int a = 1; a <= amax; ++a) {
    const std::optional<Rational> root = largest_positive_real_root(bo_poly(cache, a, 1));
    out += std::to_string(a);
    out += ",";
    out += root ? to_fixed_decimal(*root, 12) : std::string("NA");
    out += "\n";
  }
  return out;
}

/// All float roots of the difference polynomials P_{n+1} - P_n for n <= nmax,
/// one row per root, with the per-root residual of the monic-scaled
/// polynomial and the convergence flag.
inline std::string figure1_csv(const PolyCache& cache, int nmax) {
  std::string out = "n,re,im,residual,converged\n";
  char buf[160];
  for (int n = 1; n <= nmax; ++n) {
    for (const FloatRoot& r : all_roots_float(delta(cache, n))) {
      std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.3e,%d\n", n, r.value.real(),
                    r.value.imag(), r.residual, r.converged ? 1 : 0);
      out += buf;
    }
  }
  return out;
}

/// Fixed-field-order JSON image of a report.
inline nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["claim"] = rep.claim_id;
  j["domain"] = rep.domain;
  j["status"] = to_string(rep.status);
  j["exceptions"] = rep.exceptions;
  j["equalities"] = rep.equalities;
  j["witnesses"] = rep.witnesses;
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

}  // namespace partpoly
