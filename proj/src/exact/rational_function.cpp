#include "pellucas/exact/rational_function.hpp"

#include <stdexcept>

namespace pellucas::exact {

namespace {

bool is_one(const Polynomial& p) {
  return p.degree() == 0 && p.leading() == 1;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero())
    throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num, den);
  if (!is_one(g)) {
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  const mpq_class inv = 1 / den.leading();
  num_ = num * inv;
  den_ = den * inv;
}

RationalFunction::RationalFunction(Polynomial p)
    : num_(std::move(p)), den_(Polynomial::constant(1)) {}

RationalFunction RationalFunction::constant(const mpq_class& c) {
  return RationalFunction(Polynomial::constant(c));
}

mpq_class RationalFunction::evaluate(const mpq_class& x) const {
  const mpq_class d = den_.evaluate(x);
  if (sgn(d) == 0)
    throw std::domain_error("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  // Henrici: only the common factor of the denominators can cancel.
  const Polynomial g = gcd(den_, rhs.den_);
  if (is_one(g)) {
    Polynomial num = num_ * rhs.den_ + rhs.num_ * den_;
    Polynomial den = den_ * rhs.den_;
    if (num.is_zero()) return *this = RationalFunction();
    *this = RationalFunction(Canonical{}, std::move(num), std::move(den));
    return *this;
  }
  const Polynomial b1 = divide_exact(den_, g);
  const Polynomial d1 = divide_exact(rhs.den_, g);
  Polynomial t = num_ * d1 + rhs.num_ * b1;
  if (t.is_zero()) return *this = RationalFunction();
  Polynomial den = b1 * rhs.den_;
  const Polynomial h = gcd(t, g);
  if (!is_one(h)) {
    t = divide_exact(t, h);
    den = divide_exact(den, h);
  }
  *this = RationalFunction(Canonical{}, std::move(t), std::move(den));
  return *this;
}

RationalFunction operator-(RationalFunction a) {
  a.num_ = -a.num_;
  return a;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RationalFunction();
  Polynomial a = num_, b = den_, c = rhs.num_, d = rhs.den_;
  const Polynomial g1 = gcd(a, d);
  if (!is_one(g1)) {
    a = divide_exact(a, g1);
    d = divide_exact(d, g1);
  }
  const Polynomial g2 = gcd(c, b);
  if (!is_one(g2)) {
    c = divide_exact(c, g2);
    b = divide_exact(b, g2);
  }
  *this = RationalFunction(Canonical{}, a * c, b * d);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero())
    throw std::domain_error("division by the zero rational function");
  const mpq_class inv = 1 / rhs.num_.leading();
  return *this *= RationalFunction(Canonical{}, rhs.den_ * inv,
                                   rhs.num_ * inv);
}

RationalFunction pow(const RationalFunction& f, std::int64_t n) {
  if (n < 0) return RationalFunction::constant(1) / pow(f, -n);
  // Powers of coprime polynomials stay coprime.
  return RationalFunction(pow(f.numerator(), static_cast<std::uint64_t>(n)),
                          pow(f.denominator(), static_cast<std::uint64_t>(n)));
}

RationalFunction z_power(std::int64_t n) {
  const auto k = static_cast<std::size_t>(n < 0 ? -n : n);
  const Polynomial zk = Polynomial::monomial(1, k);
  return n >= 0 ? RationalFunction(zk)
                : RationalFunction(Polynomial::constant(1), zk);
}

MobiusMap::MobiusMap(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (sgn(mpq_class(a_ * d_ - b_ * c_)) == 0)
    throw std::invalid_argument("singular Mobius map (ad - bc = 0)");
}

MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner) {
  return MobiusMap(outer.a_ * inner.a_ + outer.b_ * inner.c_,
                   outer.a_ * inner.b_ + outer.b_ * inner.d_,
                   outer.c_ * inner.a_ + outer.d_ * inner.c_,
                   outer.c_ * inner.b_ + outer.d_ * inner.d_);
}

namespace {

// Homogenized p((a z + b)/(c z + d)) * (c z + d)^n for n >= deg p.
Polynomial homogenize(const Polynomial& p, const Polynomial& top,
                      const Polynomial& bottom, std::size_t n) {
  Polynomial out;
  const auto& coeffs = p.coefficients();
  // Powers of top climb while powers of bottom fall; tabulate both once.
  std::vector<Polynomial> top_pow(coeffs.size() + 1), bottom_pow(n + 1);
  top_pow[0] = bottom_pow[0] = Polynomial::constant(1);
  for (std::size_t i = 1; i < top_pow.size(); ++i) top_pow[i] = top_pow[i - 1] * top;
  for (std::size_t i = 1; i <= n; ++i) bottom_pow[i] = bottom_pow[i - 1] * bottom;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    out += top_pow[i] * bottom_pow[n - i] * coeffs[i];
  }
  return out;
}

}  // namespace

RationalFunction substitute(const RationalFunction& f, const MobiusMap& t) {
  const Polynomial top{t.b(), t.a()};
  const Polynomial bottom{t.d(), t.c()};
  const auto dn = static_cast<std::size_t>(std::max<std::int64_t>(f.numerator().degree(), 0));
  const auto dd = static_cast<std::size_t>(f.denominator().degree());
  const std::size_t n = std::max(dn, dd);
  // Both sides carry the factor (c z + d)^n, which cancels.
  return RationalFunction(homogenize(f.numerator(), top, bottom, n),
                          homogenize(f.denominator(), top, bottom, n));
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.numerator() << " / " << f.denominator();
}

}  // namespace pellucas::exact
