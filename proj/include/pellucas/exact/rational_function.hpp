#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>

#include "pellucas/exact/polynomial.hpp"

namespace pellucas::exact {

/// Ratio of two polynomials in z kept in canonical form: coprime numerator
/// and denominator, monic denominator. Zero is 0/1. Two canonical rational
/// functions are equal exactly when their coefficients agree.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  /// Canonicalizes num/den. Throws std::domain_error when den is zero.
  RationalFunction(Polynomial num, Polynomial den);
  RationalFunction(Polynomial p);  // NOLINT(google-explicit-constructor)
  static RationalFunction constant(const mpq_class& c);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Throws std::domain_error when x is a zero of the denominator.
  mpq_class evaluate(const mpq_class& x) const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RationalFunction(Canonical, Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// f^n for signed n; negative n inverts (std::domain_error for zero f).
RationalFunction pow(const RationalFunction& f, std::int64_t n);

/// z^n for signed n.
RationalFunction z_power(std::int64_t n);

/// z -> (a z + b) / (c z + d) with a d - b c != 0.
class MobiusMap {
 public:
  /// Throws std::invalid_argument for a singular map.
  MobiusMap(mpq_class a, mpq_class b, mpq_class c, mpq_class d);

  static MobiusMap identity() { return {1, 0, 0, 1}; }

  const mpq_class& a() const noexcept { return a_; }
  const mpq_class& b() const noexcept { return b_; }
  const mpq_class& c() const noexcept { return c_; }
  const mpq_class& d() const noexcept { return d_; }

  /// (outer ∘ inner)(z) = outer(inner(z)).
  friend MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner);

 private:
  mpq_class a_, b_, c_, d_;
};

/// f((a z + b) / (c z + d)), canonical.
RationalFunction substitute(const RationalFunction& f, const MobiusMap& t);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace pellucas::exact
