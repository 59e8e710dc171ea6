#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace pellucas {

using Complex = std::complex<double>;

/// A finite point of the complex plane.
class ComplexPoint {
 public:
  /// Throws std::invalid_argument unless both parts are finite.
  ComplexPoint(double re, double im);
  explicit ComplexPoint(Complex z) : ComplexPoint(z.real(), z.imag()) {}

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  Complex value() const noexcept { return {re_, im_}; }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

 private:
  double re_;
  double im_;
};

/// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rect {
  double x0;
  double y0;
  double x1;
  double y1;

  /// Throws InvalidRegion unless all corners are finite and both sides are
  /// positive.
  void validate() const;
  bool contains(double x, double y) const noexcept {
    return x >= x0 && x <= x1 && y >= y0 && y <= y1;
  }
};

/// Centers of an nx by ny cell lattice over the rectangle, row-major with
/// rows ordered by increasing imaginary part. Throws InvalidRegion for a
/// degenerate rectangle or a non-positive count.
std::vector<ComplexPoint> cell_centers(const Rect& rect, std::int64_t nx,
                                       std::int64_t ny);

}  // namespace pellucas
