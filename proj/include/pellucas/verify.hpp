#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pellucas/analysis.hpp"
#include "pellucas/equation.hpp"
#include "pellucas/evaluator.hpp"

namespace pellucas {

inline constexpr std::int64_t kMaxEquationK = 8;
inline constexpr double kResidualFloor = 1e-300;

struct ResidualReport {
  ComplexPoint point;
  std::int64_t k;
  Complex lhs;
  Complex rhs;
  double abs_residual;  // |lhs - rhs|
  double rel_residual;  // abs_residual / max(|lhs|, |rhs|, 1e-300)
  double lhs_tail;      // certified tail of the left series
  double rhs_tail;      // certified tail of the right series, times |z^p|
};

/// Both arguments at which the equation evaluates the series, in (lhs, rhs)
/// order. Throws ZeroArgument where a side is undefined at z = 0.
std::pair<ComplexPoint, ComplexPoint> equation_arguments(Equation eq,
                                                         const ComplexPoint& z);

/// True when both series arguments classify Regular.
bool preconditions_hold(Equation eq, const ComplexPoint& z,
                        const ClassifySettings& cs = {});

/// Evaluates both sides with weight 2k. PoleProximity and DidNotConverge are
/// rethrown tagged with the side they came from. Throws std::invalid_argument
/// unless 1 <= k <= 8.
ResidualReport residual(Equation eq, const ComplexPoint& z, std::int64_t k,
                        const EvalSettings& settings = {});

enum class PointStatus { Ok, Skipped, Failed };

struct PointOutcome {
  ComplexPoint point;
  PointStatus status;
  std::optional<ResidualReport> report;  // Ok only
  std::string note;                      // reason for Skipped / Failed
};

struct VerifySummary {
  std::int64_t points_tested = 0;  // Ok + Failed
  std::int64_t points_skipped = 0;
  std::int64_t points_failed = 0;
  double max_rel_residual = 0;  // over Ok points
  std::optional<ComplexPoint> worst_point;
};

struct GridVerification {
  std::vector<PointOutcome> points;  // row-major, as cell_centers
  VerifySummary summary;
};

/// residual() at every cell center; points failing preconditions_hold are
/// skipped and counted. Throws EmptyGrid when every point was skipped.
GridVerification verify_grid(Equation eq, const Rect& rect, std::int64_t nx,
                             std::int64_t ny, std::int64_t k,
                             const EvalSettings& settings = {},
                             const ClassifySettings& cs = {});

}  // namespace pellucas
