#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "pellucas/geometry.hpp"

namespace pellucas {

/// Zero of the j-th series denominator Q_j z + Q_{j-1}. Always real.
struct Pole {
  std::int64_t index;
  mpq_class location;     // -Q_{j-1} / Q_j in lowest terms
  double location_float;  // nearest double to location
};

inline constexpr std::int64_t kDefaultPoleIndexCap = 60;
inline constexpr double kDefaultPoleTolerance = 1e-6;
inline constexpr double kDefaultAccumulationTolerance = 1e-3;

/// Poles with |j| <= j_cap lying in the rectangle, sorted by location.
/// Throws InvalidRegion for a degenerate rectangle and std::invalid_argument
/// for j_cap < 1.
std::vector<Pole> poles_in_rect(const Rect& rect,
                                std::int64_t j_cap = kDefaultPoleIndexCap);

/// (1 - sqrt(2), 1 + sqrt(2)), each correctly rounded. Poles accumulate at
/// the first as j -> +inf and at the second as j -> -inf.
std::pair<double, double> accumulation_points();

enum class DomainTag { Regular, Pole, NearPole, NearAccumulation };
enum class AccumulationPoint { Lower, Upper };  // 1 - sqrt(2), 1 + sqrt(2)

struct DomainClass {
  DomainTag tag = DomainTag::Regular;
  std::int64_t index = 0;  // Pole, NearPole
  double distance = 0;     // NearPole, NearAccumulation
  AccumulationPoint which = AccumulationPoint::Lower;  // NearAccumulation
};

struct ClassifySettings {
  double pole_tol = kDefaultPoleTolerance;
  double accum_tol = kDefaultAccumulationTolerance;
  std::int64_t j_cap = kDefaultPoleIndexCap;
};

/// Classifies z against the poles with |j| <= j_cap and the two accumulation
/// points:
///  - Pole(j) when z equals a pole's double location;
///  - otherwise the nearest feature within its tolerance: NearPole(j, d) for
///    a pole closer than pole_tol, NearAccumulation for an accumulation point
///    closer than accum_tol. When both trip, the closer one wins and a pole
///    wins exact ties; among equidistant poles the smallest |j| wins;
///  - Regular otherwise.
/// Poles whose double location is within one ulp of an accumulation point
/// cannot be told apart from it and are treated as that accumulation point.
DomainClass classify(const ComplexPoint& z, const ClassifySettings& s = {});

}  // namespace pellucas
