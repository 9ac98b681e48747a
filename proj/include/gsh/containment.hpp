#pragma once

#include <functional>
#include <vector>

#include "gsh/series.hpp"

namespace gsh {

/// Closed polygon sampled from a parametrized curve gamma(t), t in [0, 2 pi).
class ClosedCurve {
 public:
  /// `inner_radius`: radius of a disk about 0 known to lie inside the curve
  /// (0 if unknown); points inside it skip the winding computation.
  ClosedCurve(const std::function<cplx(double)>& gamma, int points, double inner_radius = 0.0);

  /// Sinh of the unit circle, the boundary of sinh(D).
  static ClosedCurve sinh_boundary(int points = 4096);
  /// sqrt(1 + e^{it}) - 1, the boundary of sqrt(1 + D) - 1.
  static ClosedCurve sqrt_boundary(int points = 4096);

  int winding_number(cplx p) const;
  /// Distance from p to the polygon.
  double distance(cplx p) const;
  bool contains(cplx p) const;

  const std::vector<cplx>& vertices() const noexcept { return vertices_; }
  double outer_radius() const noexcept { return outer_radius_; }
  double inner_radius() const noexcept { return inner_radius_; }

 private:
  std::vector<cplx> vertices_;
  double inner_radius_ = 0.0;
  double outer_radius_ = 0.0;
};

}  // namespace gsh
