#include "pellucas/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pellucas/errors.hpp"
#include "pellucas/format.hpp"

namespace pellucas {

ComplexPoint::ComplexPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im))
    throw std::invalid_argument("complex point must be finite");
}

void Rect::validate() const {
  if (!std::isfinite(x0) || !std::isfinite(y0) || !std::isfinite(x1) ||
      !std::isfinite(y1))
    throw InvalidRegion("non-finite corner");
  if (!(x1 > x0) || !(y1 > y0))
    throw InvalidRegion("[" + format_double(x0) + ", " + format_double(x1) +
                        "] x [" + format_double(y0) + ", " +
                        format_double(y1) + "] has a non-positive side");
}

std::vector<ComplexPoint> cell_centers(const Rect& rect, std::int64_t nx,
                                       std::int64_t ny) {
  rect.validate();
  if (nx < 1 || ny < 1)
    throw InvalidRegion("grid counts must be positive, got " +
                        std::to_string(nx) + "x" + std::to_string(ny));
  const double dx = (rect.x1 - rect.x0) / static_cast<double>(nx);
  const double dy = (rect.y1 - rect.y0) / static_cast<double>(ny);
  std::vector<ComplexPoint> out;
  out.reserve(static_cast<std::size_t>(nx * ny));
  for (std::int64_t iy = 0; iy < ny; ++iy) {
    const double y = rect.y0 + (static_cast<double>(iy) + 0.5) * dy;
    for (std::int64_t ix = 0; ix < nx; ++ix)
      out.emplace_back(rect.x0 + (static_cast<double>(ix) + 0.5) * dx, y);
  }
  return out;
}

}  // namespace pellucas
