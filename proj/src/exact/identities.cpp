#include "pellucas/exact/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "pellucas/errors.hpp"
#include "pellucas/sequence.hpp"

namespace pellucas::exact {

namespace {

void check_degree(const RationalFunction& f, std::int64_t cap) {
  const auto deg = std::max(f.denominator().degree(), f.numerator().degree());
  if (deg > cap) throw DegreeCapExceeded(deg, cap);
}

}  // namespace

RationalFunction term_rf(std::int64_t j, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("term_rf: weight must be >= 1");
  const auto q = pell_lucas_range(j - 1, j);
  const Polynomial linear{mpq_class(q[0]), mpq_class(q[1])};
  return RationalFunction(Polynomial::constant(1),
                          pow(linear, static_cast<std::uint64_t>(m)));
}

RationalFunction window_sum(std::int64_t half_width, std::int64_t m,
                            std::int64_t degree_cap) {
  if (half_width < 1) throw std::invalid_argument("window_sum: half-width must be >= 1");
  if (m < 1) throw std::invalid_argument("window_sum: weight must be >= 1");
  // Each term contributes a distinct linear factor to the m-th power, so the
  // canonical denominator degree is known up front.
  const std::int64_t degree = (2 * half_width + 1) * m;
  if (degree > degree_cap) throw DegreeCapExceeded(degree, degree_cap);
  RationalFunction sum;
  for (std::int64_t a = 0; a <= half_width; ++a) {
    sum += term_rf(a, m);
    if (a > 0) sum += term_rf(-a, m);
  }
  return sum;
}

MobiusMap to_mobius(const IntegerMobius& t) { return {t.a, t.b, t.c, t.d}; }

std::string_view to_string(ExactVerdict v) noexcept {
  switch (v) {
    case ExactVerdict::ExactZero: return "EXACT-ZERO";
    case ExactVerdict::ExactZeroAfterBoundary: return "EXACT-ZERO-AFTER-BOUNDARY";
    case ExactVerdict::NonZero: return "NONZERO";
  }
  return "NONZERO";
}

ExactIdentityReport verify_identity_exact(Equation eq, std::int64_t half_width,
                                          std::int64_t k,
                                          std::int64_t degree_cap) {
  if (half_width < 2)
    throw std::invalid_argument("verify_identity_exact: half-width must be >= 2");
  if (k < 1) throw std::invalid_argument("verify_identity_exact: k must be >= 1");
  const auto s = shape(eq);
  const std::int64_t m = 2 * k;
  const MobiusMap lhs_map = to_mobius(s.lhs);
  const MobiusMap rhs_map = to_mobius(s.rhs);
  const RationalFunction prefactor = z_power(s.prefactor_sign * m);

  const RationalFunction window = window_sum(half_width, m, degree_cap);
  RationalFunction lhs = substitute(window, lhs_map);
  check_degree(lhs, degree_cap);
  RationalFunction rhs = prefactor * substitute(window, rhs_map);
  check_degree(rhs, degree_cap);
  RationalFunction residual = lhs - rhs;
  check_degree(residual, degree_cap);

  // The left window maps onto sigma([-J, J]); whatever sigma adds is extra on
  // the left, whatever it drops is missing from it.
  std::vector<std::int64_t> image;
  for (std::int64_t j = -half_width; j <= half_width; ++j)
    image.push_back(s.reindex_scale * j + s.reindex_offset);
  std::sort(image.begin(), image.end());
  const auto in_window = [&](std::int64_t j) {
    return j >= -half_width && j <= half_width;
  };
  const auto boundary_term = [&](std::int64_t j, int sign) {
    RationalFunction v = prefactor * substitute(term_rf(j, m), rhs_map);
    if (sign < 0) v = -v;
    return BoundaryTerm{j, sign, std::move(v)};
  };
  std::vector<BoundaryTerm> boundary;
  for (std::int64_t j : image)
    if (!in_window(j)) boundary.push_back(boundary_term(j, +1));
  for (std::int64_t j = -half_width; j <= half_width; ++j)
    if (!std::binary_search(image.begin(), image.end(), j))
      boundary.push_back(boundary_term(j, -1));

  RationalFunction diff = residual;
  for (const auto& b : boundary) diff -= b.value;

  ExactVerdict verdict = ExactVerdict::NonZero;
  if (residual.is_zero() && boundary.empty())
    verdict = ExactVerdict::ExactZero;
  else if (diff.is_zero())
    verdict = ExactVerdict::ExactZeroAfterBoundary;

  return {eq,
          half_width,
          k,
          std::move(lhs),
          std::move(rhs),
          std::move(residual),
          std::move(boundary),
          std::move(diff),
          verdict};
}

}  // namespace pellucas::exact
