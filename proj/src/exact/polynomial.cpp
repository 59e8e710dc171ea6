#include "pellucas/exact/polynomial.hpp"

#include <stdexcept>

namespace pellucas::exact {

Polynomial::Polynomial(std::vector<mpq_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<mpq_class> coefficients)
    : Polynomial(std::vector<mpq_class>(coefficients)) {}

Polynomial Polynomial::constant(const mpq_class& c) { return Polynomial{c}; }

Polynomial Polynomial::z() { return Polynomial{0, 1}; }

Polynomial Polynomial::monomial(const mpq_class& c, std::size_t n) {
  std::vector<mpq_class> v(n + 1);
  v[n] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpq_class(0);
}

const mpq_class& Polynomial::leading() const {
  if (coeffs_.empty())
    throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

mpq_class Polynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const mpq_class inv = 1 / leading();
  return *this * inv;
}

Polynomial pow(const Polynomial& p, std::uint64_t n) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<mpq_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<mpq_class> quot(rem.size() - db);
  const mpq_class inv_lead = 1 / bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpq_class q = rem[k + db] * inv_lead;
    if (sgn(q) == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * bc[i];
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

namespace {

using IntPoly = std::vector<mpz_class>;

// Scales p to an integer polynomial with content one and positive leading
// coefficient.
IntPoly primitive_part(const Polynomial& p) {
  mpz_class den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                                 c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coefficients().size());
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    out.push_back(c.get_num() * (den / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (sgn(out.back()) < 0) content = -content;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return out;
}

void make_primitive(IntPoly& p) {
  mpz_class content = 0;
  for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (sgn(p.back()) < 0) content = -content;
  if (content == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Pseudo-remainder of a by b (deg a >= deg b), left in a.
void pseudo_remainder(IntPoly& a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    trim(a);
  }
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Primitive remainder sequence over the integers; the contents of the
  // inputs do not matter because the result is made monic over Q.
  IntPoly u = primitive_part(a);
  IntPoly v = primitive_part(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    pseudo_remainder(u, v);
    if (!u.empty()) make_primitive(u);
    std::swap(u, v);
  }
  std::vector<mpq_class> coeffs(u.begin(), u.end());
  return Polynomial(std::move(coeffs)).monic();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) os << ", ";
    os << p.coefficients()[i].get_str();
  }
  return os << ']';
}

}  // namespace pellucas::exact
