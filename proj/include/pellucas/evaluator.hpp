#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pellucas/errors.hpp"
#include "pellucas/geometry.hpp"

namespace pellucas {

/// Integer series weight m >= 2.
class Weight {
 public:
  /// Throws std::invalid_argument for m < 2.
  explicit Weight(std::int64_t m);
  std::int64_t m() const noexcept { return m_; }

 private:
  std::int64_t m_;
};

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::int64_t kDefaultMaxHalfWidth = 200;
inline constexpr double kDefaultPoleGuard = 1e-8;

struct EvalSettings {
  double target_tol = kDefaultTolerance;
  std::int64_t max_half_width = kDefaultMaxHalfWidth;
  /// A term is rejected when |Q_j z + Q_{j-1}| < pole_guard * max(|Q_j|, 1).
  double pole_guard = kDefaultPoleGuard;

  /// Throws std::invalid_argument unless target_tol > 0, max_half_width >= 4
  /// and pole_guard > 0.
  void validate() const;
};

struct EvalResult {
  Complex value;       // minus_part + plus_part
  Complex minus_part;  // terms with j <= 0
  Complex plus_part;   // terms with j >= 1
  double tail_bound;   // certified bound on the omitted |j| > terms_used
  std::int64_t terms_used;
};

/// (Q_j z + Q_{j-1})^{-m} by repeated multiplication of the reciprocal.
/// Throws PoleProximity when the denominator falls under the guard.
Complex term_value(std::int64_t j, const ComplexPoint& z, const Weight& m,
                   double pole_guard = kDefaultPoleGuard);

/// Upper bound on sum_{|j| > half_width} |Q_j z + Q_{j-1}|^{-m}.
///
/// For j > J every pole -Q_{j-1}/Q_j lies within 8 / (Q_{J+1} Q_{J+2}) of
/// 1 - sqrt(2) (consecutive pole locations alternate around the limit and
/// differ by 8 / |Q_j Q_{j+1}|), and symmetrically for j < -J around
/// 1 + sqrt(2). With |Q_j| >= Q_{J+1} 2^{|j|-J-1} each side is bounded by a
/// geometric series. Returns the largest finite double when z is not
/// separated from an accumulation point at this half-width. Requires
/// half_width >= 2.
double tail_bound(std::int64_t half_width, const ComplexPoint& z,
                  const Weight& m);

/// Sums the bilateral series over |j| <= J for the smallest J >= 2 whose tail
/// bound meets target_tol. Throws DidNotConverge when no J up to
/// max_half_width qualifies and PoleProximity from any summed term.
EvalResult eval_series(const ComplexPoint& z, const Weight& m,
                       const EvalSettings& settings = {});

struct GridFailure {
  ErrorKind kind;
  std::string message;
};

struct GridEntry {
  ComplexPoint point;
  std::variant<EvalResult, GridFailure> outcome;
};

/// eval_series over cell_centers(rect, nx, ny). Per-point domain errors are
/// recorded in the entry; InvalidRegion is thrown for a bad lattice.
std::vector<GridEntry> eval_grid(const Rect& rect, std::int64_t nx,
                                 std::int64_t ny, const Weight& m,
                                 const EvalSettings& settings = {});

}  // namespace pellucas
