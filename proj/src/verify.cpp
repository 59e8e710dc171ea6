#include "pellucas/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "pellucas/detail/parallel.hpp"

namespace pellucas {

namespace {

Complex apply(const IntegerMobius& t, Complex z) {
  return (static_cast<double>(t.a) * z + static_cast<double>(t.b)) /
         (static_cast<double>(t.c) * z + static_cast<double>(t.d));
}

Complex z_power(Complex z, std::int64_t p) {
  if (p == 0) return {1.0, 0.0};
  const Complex base = p > 0 ? z : Complex(1.0, 0.0) / z;
  Complex out = base;
  for (std::int64_t i = 1; i < std::abs(p); ++i) out *= base;
  return out;
}

}  // namespace

std::pair<ComplexPoint, ComplexPoint> equation_arguments(Equation eq,
                                                         const ComplexPoint& z) {
  const auto s = shape(eq);
  const bool zero = z.re() == 0 && z.im() == 0;
  if (zero && (s.rhs_needs_nonzero || eq == Equation::Inversion))
    throw ZeroArgument(std::string(to_string(eq)));
  return {ComplexPoint(apply(s.lhs, z.value())),
          ComplexPoint(apply(s.rhs, z.value()))};
}

bool preconditions_hold(Equation eq, const ComplexPoint& z,
                        const ClassifySettings& cs) {
  try {
    const auto [l, r] = equation_arguments(eq, z);
    return classify(l, cs).tag == DomainTag::Regular &&
           classify(r, cs).tag == DomainTag::Regular;
  } catch (const ZeroArgument&) {
    return false;
  } catch (const std::invalid_argument&) {
    return false;  // transformed point left the double range
  }
}

ResidualReport residual(Equation eq, const ComplexPoint& z, std::int64_t k,
                        const EvalSettings& settings) {
  if (k < 1 || k > kMaxEquationK)
    throw std::invalid_argument("k must be in [1, 8]");
  const auto [lhs_arg, rhs_arg] = equation_arguments(eq, z);
  const Weight weight(2 * k);

  const auto eval_side = [&](const ComplexPoint& w, Side side) {
    try {
      return eval_series(w, weight, settings);
    } catch (const PoleProximity& e) {
      throw e.with_side(side);
    } catch (const DidNotConverge& e) {
      throw e.with_side(side);
    }
  };
  const EvalResult l = eval_side(lhs_arg, Side::Lhs);
  const EvalResult r = eval_side(rhs_arg, Side::Rhs);

  const Complex prefactor = z_power(z.value(), shape(eq).prefactor_sign * 2 * k);
  ResidualReport rep{z, k, l.value, prefactor * r.value, 0, 0, l.tail_bound,
                     std::abs(prefactor) * r.tail_bound};
  rep.abs_residual = std::abs(rep.lhs - rep.rhs);
  rep.rel_residual =
      rep.abs_residual /
      std::max({std::abs(rep.lhs), std::abs(rep.rhs), kResidualFloor});
  return rep;
}

GridVerification verify_grid(Equation eq, const Rect& rect, std::int64_t nx,
                             std::int64_t ny, std::int64_t k,
                             const EvalSettings& settings,
                             const ClassifySettings& cs) {
  if (k < 1 || k > kMaxEquationK)
    throw std::invalid_argument("k must be in [1, 8]");
  settings.validate();
  const auto centers = cell_centers(rect, nx, ny);
  GridVerification out;
  out.points.reserve(centers.size());
  for (const auto& p : centers)
    out.points.push_back({p, PointStatus::Skipped, std::nullopt, {}});

  detail::parallel_for(out.points.size(), [&](std::size_t i) {
    auto& pt = out.points[i];
    if (!preconditions_hold(eq, pt.point, cs)) {
      pt.note = "precondition";
      return;
    }
    try {
      pt.report = residual(eq, pt.point, k, settings);
      pt.status = PointStatus::Ok;
    } catch (const Error& e) {
      pt.status = PointStatus::Failed;
      pt.note = e.what();
    }
  });

  auto& sum = out.summary;
  for (const auto& pt : out.points) {
    switch (pt.status) {
      case PointStatus::Skipped: ++sum.points_skipped; break;
      case PointStatus::Failed:
        ++sum.points_tested;
        ++sum.points_failed;
        break;
      case PointStatus::Ok:
        ++sum.points_tested;
        if (!sum.worst_point || pt.report->rel_residual > sum.max_rel_residual) {
          sum.max_rel_residual = pt.report->rel_residual;
          sum.worst_point = pt.point;
        }
        break;
    }
  }
  if (sum.points_tested == 0) throw EmptyGrid(sum.points_skipped);
  return out;
}

}  // namespace pellucas
