#include "pellucas/sequence.hpp"

#include <cmath>
#include <limits>
#include <mutex>

#include "pellucas/errors.hpp"

namespace pellucas {

SequenceTable::SequenceTable(std::int64_t index_cap)
    : index_cap_(index_cap), forward_{2, 2}, backward_{-2} {}

const SequenceTable& SequenceTable::shared() {
  static const SequenceTable table;
  return table;
}

void SequenceTable::ensure(std::int64_t lo, std::int64_t hi) const {
  if (lo < -index_cap_) throw IndexCapExceeded(lo, index_cap_);
  if (hi > index_cap_) throw IndexCapExceeded(hi, index_cap_);
  {
    std::shared_lock lock(mutex_);
    if (hi < static_cast<std::int64_t>(forward_.size()) &&
        -lo <= static_cast<std::int64_t>(backward_.size()))
      return;
  }
  std::unique_lock lock(mutex_);
  while (static_cast<std::int64_t>(forward_.size()) <= hi) {
    const auto n = forward_.size();
    forward_.push_back(2 * forward_[n - 1] + forward_[n - 2]);
  }
  while (static_cast<std::int64_t>(backward_.size()) < -lo) {
    // Q_{-n} = Q_{-n+2} - 2 Q_{-n+1}
    const auto n = static_cast<std::int64_t>(backward_.size()) + 1;
    const mpz_class& q2 = n == 2 ? forward_[0] : backward_[n - 3];
    const mpz_class& q1 = backward_[n - 2];
    backward_.push_back(q2 - 2 * q1);
  }
}

const mpz_class& SequenceTable::lookup(std::int64_t n) const {
  return n >= 0 ? forward_[static_cast<std::size_t>(n)]
                : backward_[static_cast<std::size_t>(-n - 1)];
}

mpz_class SequenceTable::at(std::int64_t n) const {
  ensure(std::min<std::int64_t>(n, 0), std::max<std::int64_t>(n, 1));
  std::shared_lock lock(mutex_);
  return lookup(n);
}

std::vector<mpz_class> SequenceTable::range(std::int64_t lo,
                                            std::int64_t hi) const {
  if (lo > hi) throw InvalidRange(lo, hi);
  ensure(std::min<std::int64_t>(lo, 0), std::max<std::int64_t>(hi, 1));
  std::shared_lock lock(mutex_);
  std::vector<mpz_class> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) out.push_back(lookup(n));
  return out;
}

mpq_class SequenceTable::pole_ratio(std::int64_t j) const {
  const auto q = range(j - 1, j);
  mpq_class r(-q[0], q[1]);
  r.canonicalize();
  return r;
}

std::pair<std::int64_t, std::int64_t> SequenceTable::computed_range() const {
  std::shared_lock lock(mutex_);
  return {-static_cast<std::int64_t>(backward_.size()),
          static_cast<std::int64_t>(forward_.size()) - 1};
}

mpz_class pell_lucas(std::int64_t n) { return SequenceTable::shared().at(n); }

std::vector<mpz_class> pell_lucas_range(std::int64_t lo, std::int64_t hi) {
  return SequenceTable::shared().range(lo, hi);
}

mpq_class pole_ratio(std::int64_t j) {
  return SequenceTable::shared().pole_ratio(j);
}

namespace {

// Q_n overflows a double a little past n = 800.
constexpr std::int64_t kDoubleTableSize = 1024;

const std::vector<double>& magnitude_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t;
    t.reserve(kDoubleTableSize);
    mpz_class prev = 2, cur = 2;
    const mpz_class limit =
        mpz_class(std::numeric_limits<double>::max());
    for (std::int64_t n = 0; n < kDoubleTableSize; ++n) {
      // mpz_get_d truncates, which keeps every entry a lower bound.
      t.push_back(prev > limit ? std::numeric_limits<double>::infinity()
                               : prev.get_d());
      mpz_class next = 2 * cur + prev;
      prev = cur;
      cur = next;
    }
    return t;
  }();
  return table;
}

}  // namespace

double pell_lucas_magnitude(std::int64_t n) {
  const auto a = n < 0 ? -n : n;
  const auto& t = magnitude_table();
  if (a >= static_cast<std::int64_t>(t.size()))
    return std::numeric_limits<double>::infinity();
  return t[static_cast<std::size_t>(a)];
}

double pell_lucas_double(std::int64_t n) {
  const double m = pell_lucas_magnitude(n);
  return (n < 0 && (n % 2 != 0)) ? -m : m;
}

}  // namespace pellucas
