#include "gsh/containment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gsh/error.hpp"

namespace gsh {

namespace {

// > 0 when p lies left of the directed line a -> b.
double side(cplx a, cplx b, cplx p) {
  return (b.real() - a.real()) * (p.imag() - a.imag()) - (p.real() - a.real()) * (b.imag() - a.imag());
}

double segment_distance(cplx a, cplx b, cplx p) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 > 0.0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

ClosedCurve::ClosedCurve(const std::function<cplx(double)>& gamma, int points, double inner_radius)
    : inner_radius_(inner_radius) {
  if (points < 3) throw Error(ErrorCode::InvalidArgument, "closed curve needs at least 3 points");
  vertices_.reserve(static_cast<size_t>(points));
  for (int j = 0; j < points; ++j) {
    const double t = 2.0 * std::numbers::pi * j / points;
    vertices_.push_back(gamma(t));
    outer_radius_ = std::max(outer_radius_, std::abs(vertices_.back()));
  }
}

ClosedCurve ClosedCurve::sinh_boundary(int points) {
  // sinh is univalent on the closed disk with sinh(0) = 0; the nearest
  // boundary point to 0 is sinh(+-i) = +-i sin 1.
  const double inner = std::sin(1.0) * (1.0 - 1e-6);
  return ClosedCurve([](double t) { return std::sinh(std::polar(1.0, t)); }, points, inner);
}

ClosedCurve ClosedCurve::sqrt_boundary(int points) {
  // shift the parameter so t = 0 lands on the cusp at -1 and the branch cut is never crossed
  return ClosedCurve(
      [](double t) { return std::sqrt(1.0 + std::polar(1.0, t - std::numbers::pi)) - 1.0; }, points);
}

int ClosedCurve::winding_number(cplx p) const {
  int wn = 0;
  const size_t n = vertices_.size();
  for (size_t j = 0; j < n; ++j) {
    const cplx a = vertices_[j];
    const cplx b = vertices_[(j + 1) % n];
    if (a.imag() <= p.imag()) {
      if (b.imag() > p.imag() && side(a, b, p) > 0.0) ++wn;
    } else if (b.imag() <= p.imag() && side(a, b, p) < 0.0) {
      --wn;
    }
  }
  return wn;
}

double ClosedCurve::distance(cplx p) const {
  double best = std::numeric_limits<double>::infinity();
  const size_t n = vertices_.size();
  for (size_t j = 0; j < n; ++j) best = std::min(best, segment_distance(vertices_[j], vertices_[(j + 1) % n], p));
  return best;
}

bool ClosedCurve::contains(cplx p) const {
  const double r = std::abs(p);
  if (r < inner_radius_) return true;
  if (r > outer_radius_) return false;
  return winding_number(p) != 0;
}

}  // namespace gsh
