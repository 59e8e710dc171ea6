#include "pellucas/evaluator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pellucas/analysis.hpp"
#include "pellucas/detail/parallel.hpp"
#include "pellucas/sequence.hpp"

namespace pellucas {

Weight::Weight(std::int64_t m) : m_(m) {
  if (m < 2) throw std::invalid_argument("weight must be an integer >= 2");
}

void EvalSettings::validate() const {
  if (!(target_tol > 0)) throw std::invalid_argument("target_tol must be > 0");
  if (max_half_width < 4) throw std::invalid_argument("max_half_width must be >= 4");
  if (!(pole_guard > 0)) throw std::invalid_argument("pole_guard must be > 0");
}

namespace {

constexpr double kMaxReal = std::numeric_limits<double>::max();
constexpr double kEps = std::numeric_limits<double>::epsilon();

Complex int_power(Complex base, std::int64_t m) {
  Complex out = base;
  for (std::int64_t i = 1; i < m; ++i) out *= base;
  return out;
}

double int_power(double base, std::int64_t m) {
  double out = base;
  for (std::int64_t i = 1; i < m; ++i) out *= base;
  return out;
}

// Kahan-Babuska (Neumaier) summation, componentwise.
class CompensatedSum {
 public:
  void add(Complex x) {
    add(re_, re_c_, x.real());
    add(im_, im_c_, x.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

// Upper bound on |a - fl(a)| for an accumulation point a.
double rounding_radius(double a) {
  return std::nextafter(std::abs(a), kMaxReal) - std::abs(a);
}

}  // namespace

Complex term_value(std::int64_t j, const ComplexPoint& z, const Weight& m,
                   double pole_guard) {
  const double q = pell_lucas_double(j);
  const double q_prev = pell_lucas_double(j - 1);
  if (std::isinf(q) || std::isinf(q_prev)) {
    // Beyond double range the term underflows unless z sits on the limit
    // point that the poles have collapsed onto.
    const auto [lower, upper] = accumulation_points();
    const double limit = j > 0 ? lower : upper;
    const double dist = std::abs(z.value() - limit);
    if (dist < pole_guard) throw PoleProximity(j, dist);
    return {0.0, 0.0};
  }
  const Complex base = q * z.value() + q_prev;
  const double scaled = std::abs(base) / std::max(std::abs(q), 1.0);
  if (scaled < pole_guard) throw PoleProximity(j, scaled);
  return int_power(Complex(1.0, 0.0) / base, m.m());
}

double tail_bound(std::int64_t half_width, const ComplexPoint& z,
                  const Weight& m) {
  if (half_width < 2) throw std::invalid_argument("tail_bound: half-width must be >= 2");
  const double q1 = pell_lucas_magnitude(half_width + 1);
  const double q2 = pell_lucas_magnitude(half_width + 2);
  // Both magnitudes are lower bounds, so spread is an upper bound up to the
  // final rounding, which the factor covers.
  const double spread = 8.0 / q1 / q2 * (1 + 4 * kEps);
  const auto [lower, upper] = accumulation_points();
  const double shrink = 1 - 4 * kEps;
  const double d_plus =
      std::abs(z.value() - lower) * shrink - spread - rounding_radius(lower);
  const double d_minus =
      std::abs(z.value() - upper) * shrink - spread - rounding_radius(upper);
  if (!(d_plus > 0) || !(d_minus > 0)) return kMaxReal;

  const double mm = static_cast<double>(m.m());
  const double geometric = 1.0 / (1.0 - std::exp2(-mm));
  const double side_plus = int_power(1.0 / (q1 * d_plus), m.m());
  const double side_minus = int_power(1.0 / (q1 * d_minus), m.m());
  const double bound = geometric * (side_plus + side_minus) *
                       (1 + 4 * (mm + 8) * kEps);
  return std::isfinite(bound) ? bound : kMaxReal;
}

EvalResult eval_series(const ComplexPoint& z, const Weight& m,
                       const EvalSettings& settings) {
  settings.validate();
  // The bound is non-increasing in J, so the cap decides convergence before
  // any term is touched.
  const double at_cap = tail_bound(settings.max_half_width, z, m);
  if (!(at_cap <= settings.target_tol))
    throw DidNotConverge(settings.max_half_width, at_cap);
  std::int64_t half_width = 2;
  double bound = tail_bound(half_width, z, m);
  while (bound > settings.target_tol) {
    ++half_width;
    bound = tail_bound(half_width, z, m);
  }

  CompensatedSum minus, plus;
  minus.add(term_value(0, z, m, settings.pole_guard));
  for (std::int64_t a = 1; a <= half_width; ++a) {
    plus.add(term_value(a, z, m, settings.pole_guard));
    minus.add(term_value(-a, z, m, settings.pole_guard));
  }
  EvalResult r;
  r.minus_part = minus.value();
  r.plus_part = plus.value();
  r.value = r.minus_part + r.plus_part;
  r.tail_bound = bound;
  r.terms_used = half_width;
  return r;
}

std::vector<GridEntry> eval_grid(const Rect& rect, std::int64_t nx,
                                 std::int64_t ny, const Weight& m,
                                 const EvalSettings& settings) {
  settings.validate();
  const auto points = cell_centers(rect, nx, ny);
  std::vector<GridEntry> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({p, GridFailure{}});
  detail::parallel_for(out.size(), [&](std::size_t i) {
    try {
      out[i].outcome = eval_series(out[i].point, m, settings);
    } catch (const Error& e) {
      out[i].outcome = GridFailure{e.kind(), e.what()};
    }
  });
  return out;
}

}  // namespace pellucas
