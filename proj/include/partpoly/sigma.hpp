#pragma once

#include "partpoly/rational.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace partpoly {

/// sigma(m) = sum of divisors of m, computed for all m <= max_n by sieve.
/// Index 0 of the returned table is unused (set to 0).
inline std::vector<std::uint64_t> sigma_values(std::size_t max_n) {
  if (max_n > (std::size_t{1} << 31))
    throw std::invalid_argument("sigma_values: table size out of range");
  std::vector<std::uint64_t> table(max_n + 1, 0);
  for (std::size_t d = 1; d <= max_n; ++d)
    for (std::size_t m = d; m <= max_n; m += d) table[m] += d;
  return table;
}

namespace detail {

// Process-wide memo behind sigma(); grows geometrically on demand.
class SigmaMemo {
 public:
  static std::uint64_t value(std::uint64_t n) {
    static SigmaMemo memo;
    std::lock_guard<std::mutex> lock(memo.mu_);
    if (n >= memo.table_.size())
      memo.table_ = sigma_values(std::max<std::size_t>(2 * memo.table_.size(), n + 1) - 1);
    return memo.table_[n];
  }

 private:
  SigmaMemo() : table_(sigma_values(1024)) {}
  std::mutex mu_;
  std::vector<std::uint64_t> table_;
};

}  // namespace detail

/// Sum of divisors of n; rejects n = 0.
inline Int sigma(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma: n must be >= 1");
  return Int(static_cast<unsigned long>(detail::SigmaMemo::value(n)));
}

}  // namespace partpoly
