#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace pellucas::exact {

/// Dense univariate polynomial in z over the rationals. Coefficients are
/// stored in ascending degree and the leading coefficient is never zero; the
/// zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coefficients);
  Polynomial(std::initializer_list<mpq_class> coefficients);

  static Polynomial constant(const mpq_class& c);
  /// The generator z.
  static Polynomial z();
  /// c * z^n.
  static Polynomial monomial(const mpq_class& c, std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const std::vector<mpq_class>& coefficients() const noexcept {
    return coeffs_;
  }
  /// Coefficient of z^i (zero beyond the degree).
  mpq_class coefficient(std::size_t i) const;
  /// Requires a nonzero polynomial.
  const mpq_class& leading() const;

  mpq_class evaluate(const mpq_class& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const mpq_class& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Divides every coefficient by the leading one. Zero stays zero.
  Polynomial monic() const;

 private:
  void trim();

  std::vector<mpq_class> coeffs_;
};

Polynomial pow(const Polynomial& p, std::uint64_t n);

/// Euclidean division: a = q * b + r with deg r < deg b. Throws
/// std::domain_error when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b);

/// Exact quotient; throws std::domain_error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace pellucas::exact
