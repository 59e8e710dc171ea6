#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pellucas/equation.hpp"
#include "pellucas/exact/rational_function.hpp"

namespace pellucas::exact {

inline constexpr std::int64_t kDefaultDegreeCap = 400;

/// 1 / (Q_j z + Q_{j-1})^m. Requires m >= 1.
RationalFunction term_rf(std::int64_t j, std::int64_t m);

/// Sum of term_rf(j, m) over |j| <= half_width. Throws DegreeCapExceeded when
/// the denominator degree (2 half_width + 1) m would exceed degree_cap.
RationalFunction window_sum(std::int64_t half_width, std::int64_t m,
                            std::int64_t degree_cap = kDefaultDegreeCap);

MobiusMap to_mobius(const IntegerMobius& t);

/// One term by which a reindexed window differs from the original window,
/// already multiplied by the equation's prefactor and signed.
struct BoundaryTerm {
  std::int64_t index;  // j of the omitted or extra term
  int sign;            // +1 extra on the left side, -1 missing from it
  RationalFunction value;
};

enum class ExactVerdict { ExactZero, ExactZeroAfterBoundary, NonZero };

std::string_view to_string(ExactVerdict v) noexcept;

struct ExactIdentityReport {
  Equation equation;
  std::int64_t half_width;
  std::int64_t k;
  RationalFunction lhs;       // windowed sum at the transformed argument
  RationalFunction rhs;       // prefactor times windowed sum
  RationalFunction residual;  // lhs - rhs
  std::vector<BoundaryTerm> boundary;
  RationalFunction residual_minus_boundary;
  ExactVerdict verdict;
};

/// Replaces both series of the chosen equation by the symmetric window
/// |j| <= half_width and compares them exactly. The boundary terms come from
/// index bookkeeping alone; the residual comes from substitution and
/// subtraction, so agreement of the two is a genuine check.
/// Requires half_width >= 2 and k >= 1.
ExactIdentityReport verify_identity_exact(
    Equation eq, std::int64_t half_width, std::int64_t k,
    std::int64_t degree_cap = kDefaultDegreeCap);

}  // namespace pellucas::exact
