#pragma once

#include "partpoly/sigma.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace partpoly {

/// Counts p_{-k}(0..N) of k-colored partitions.
struct ColoredCountTable {
  int colors = 1;
  std::vector<Int> counts;  // counts[n] = p_{-k}(n)
};

/// Expands prod_{m>=1} (1 - q^m)^{-k} as a power series up to q^N by
/// multiplying in each truncated factor 1/(1-q^m), k times.
///
/// This path is deliberately independent of the sigma recurrence behind
/// PolyCache, so the two can cross-validate each other.
inline ColoredCountTable colored_counts_oracle(int k, int N) {
  if (k < 1) throw std::invalid_argument("colored_counts_oracle: k must be >= 1");
  if (N < 0) throw std::invalid_argument("colored_counts_oracle: N must be >= 0");
  std::vector<Int> c(static_cast<std::size_t>(N) + 1);
  c[0] = 1;
  for (int m = 1; m <= N; ++m)
    for (int rep = 0; rep < k; ++rep)
      for (int i = m; i <= N; ++i) c[i] += c[i - m];
  return {k, std::move(c)};
}

/// p(0..N) by the divisor-sum recurrence n p(n) = sum_{k=1..n} sigma(k) p(n-k),
/// i.e. the polynomial recurrence specialized at x = 1. Cheap enough for a few
/// thousand terms, no polynomials required.
inline std::vector<Int> partition_sequence(int N) {
  if (N < 0) throw std::invalid_argument("partition_sequence: N must be >= 0");
  const std::vector<std::uint64_t> sig = sigma_values(static_cast<std::size_t>(N));
  std::vector<Int> p(static_cast<std::size_t>(N) + 1);
  p[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Int acc(0);
    for (int k = 1; k <= n; ++k) acc += static_cast<unsigned long>(sig[k]) * p[n - k];
    // the sum is always divisible by n
    mpz_divexact_ui(p[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return p;
}

}  // namespace partpoly
