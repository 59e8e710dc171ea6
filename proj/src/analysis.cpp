#include "pellucas/analysis.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pellucas/format.hpp"
#include "pellucas/sequence.hpp"

namespace pellucas {

std::vector<Pole> poles_in_rect(const Rect& rect, std::int64_t j_cap) {
  rect.validate();
  if (j_cap < 1) throw std::invalid_argument("j_cap must be >= 1");
  std::vector<Pole> out;
  if (!(rect.y0 <= 0 && rect.y1 >= 0)) return out;
  const mpq_class lo(rect.x0), hi(rect.x1);
  const auto q = pell_lucas_range(-j_cap - 1, j_cap);
  for (std::int64_t j = -j_cap; j <= j_cap; ++j) {
    const auto idx = static_cast<std::size_t>(j + j_cap + 1);
    mpq_class loc(-q[idx - 1], q[idx]);
    loc.canonicalize();
    if (loc < lo || loc > hi) continue;
    const double f = nearest_double(loc);
    out.push_back({j, std::move(loc), f});
  }
  std::sort(out.begin(), out.end(),
            [](const Pole& a, const Pole& b) { return a.location < b.location; });
  return out;
}

std::pair<double, double> accumulation_points() {
  static const std::pair<double, double> points = [] {
    mpfr_t r;
    mpfr_init2(r, 256);
    mpfr_sqrt_ui(r, 2, MPFR_RNDN);
    mpfr_ui_sub(r, 1, r, MPFR_RNDN);
    const double lower = mpfr_get_d(r, MPFR_RNDN);
    mpfr_sqrt_ui(r, 2, MPFR_RNDN);
    mpfr_add_ui(r, r, 1, MPFR_RNDN);
    const double upper = mpfr_get_d(r, MPFR_RNDN);
    mpfr_clear(r);
    return std::pair{lower, upper};
  }();
  return points;
}

namespace {

struct PoleFloat {
  std::int64_t index;
  double location;
};

// Beyond this every pole rounds onto an accumulation point anyway.
constexpr std::int64_t kClassifyIndexLimit = 512;

// Resolvable poles ordered by |j|, then j.
const std::vector<PoleFloat>& resolvable_poles() {
  static const std::vector<PoleFloat> table = [] {
    const auto [lower, upper] = accumulation_points();
    const auto close = [](double x, double a) {
      return std::abs(x - a) <=
             std::nextafter(std::abs(a), std::numeric_limits<double>::max()) -
                 std::abs(a);
    };
    std::vector<PoleFloat> t;
    for (std::int64_t a = 0; a <= kClassifyIndexLimit; ++a) {
      for (std::int64_t j : {a, -a}) {
        if (a == 0 && j < 0) continue;
        const double f = nearest_double(pole_ratio(j));
        if (close(f, lower) || close(f, upper)) continue;
        t.push_back({j, f});
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

DomainClass classify(const ComplexPoint& z, const ClassifySettings& s) {
  if (!(s.pole_tol > 0) || !(s.accum_tol > 0))
    throw std::invalid_argument("classify tolerances must be positive");
  const std::int64_t cap = std::min(s.j_cap, kClassifyIndexLimit);

  double best = std::numeric_limits<double>::infinity();
  std::int64_t best_index = 0;
  for (const auto& p : resolvable_poles()) {
    if (p.index > cap || -p.index > cap) continue;
    if (z.im() == 0 && z.re() == p.location)
      return {DomainTag::Pole, p.index, 0.0, AccumulationPoint::Lower};
    const double d = std::abs(z.value() - p.location);
    if (d < best) {
      best = d;
      best_index = p.index;
    }
  }

  const auto [lower, upper] = accumulation_points();
  const double d_lower = std::abs(z.value() - lower);
  const double d_upper = std::abs(z.value() - upper);
  const double d_accum = std::min(d_lower, d_upper);
  const auto which =
      d_lower <= d_upper ? AccumulationPoint::Lower : AccumulationPoint::Upper;

  const bool near_pole = best < s.pole_tol;
  const bool near_accum = d_accum < s.accum_tol;
  if (near_pole && (!near_accum || best <= d_accum))
    return {DomainTag::NearPole, best_index, best, AccumulationPoint::Lower};
  if (near_accum) return {DomainTag::NearAccumulation, 0, d_accum, which};
  return {};
}

}  // namespace pellucas
