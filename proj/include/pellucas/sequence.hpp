#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace pellucas {

inline constexpr std::int64_t kDefaultIndexCap = 100'000;

/// Memoized Pell-Lucas numbers Q_n for signed n, with Q_0 = Q_1 = 2 and
/// Q_n = 2 Q_{n-1} + Q_{n-2} applied forward for n >= 2 and backward
/// (Q_{n-2} = Q_n - 2 Q_{n-1}) for negative n.
///
/// The table grows on demand and entries never change once computed. All
/// member functions are safe to call concurrently.
class SequenceTable {
 public:
  explicit SequenceTable(std::int64_t index_cap = kDefaultIndexCap);

  SequenceTable(const SequenceTable&) = delete;
  SequenceTable& operator=(const SequenceTable&) = delete;

  /// Q_n. Throws IndexCapExceeded when |n| exceeds the cap.
  mpz_class at(std::int64_t n) const;

  /// [Q_lo, ..., Q_hi]. Throws InvalidRange when lo > hi.
  std::vector<mpz_class> range(std::int64_t lo, std::int64_t hi) const;

  /// The zero of the j-th series denominator, -Q_{j-1}/Q_j, in lowest terms.
  mpq_class pole_ratio(std::int64_t j) const;

  /// Closed index interval currently held in memory.
  std::pair<std::int64_t, std::int64_t> computed_range() const;

  std::int64_t index_cap() const noexcept { return index_cap_; }

  /// Process-wide table with the default cap.
  static const SequenceTable& shared();

 private:
  void ensure(std::int64_t lo, std::int64_t hi) const;
  const mpz_class& lookup(std::int64_t n) const;

  std::int64_t index_cap_;
  mutable std::shared_mutex mutex_;
  // forward_[n] = Q_n for n >= 0; backward_[n - 1] = Q_{-n} for n >= 1.
  mutable std::vector<mpz_class> forward_;
  mutable std::vector<mpz_class> backward_;
};

mpz_class pell_lucas(std::int64_t n);
std::vector<mpz_class> pell_lucas_range(std::int64_t lo, std::int64_t hi);
mpq_class pole_ratio(std::int64_t j);

/// |Q_n| as a double, truncated toward zero, so never larger than the exact
/// magnitude. +inf once the value leaves the double range. Backed by a table
/// built once; valid for any |n|.
double pell_lucas_magnitude(std::int64_t n);

/// Signed Q_n as a double (same rounding as pell_lucas_magnitude).
double pell_lucas_double(std::int64_t n);

}  // namespace pellucas
