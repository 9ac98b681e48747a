#include "gsh/growth.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "gsh/error.hpp"

namespace gsh {

double shi_series(double x) {
  // term_k = x^{2k+1}/(2k+1)!
  double term = x;
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= x * x / ((2.0 * k) * (2.0 * k + 1.0));
    const double add = term / (2.0 * k + 1.0);
    sum += add;
    if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double shi_quadrature(double x) {
  auto integrand = [](double t) { return t == 0.0 ? 1.0 : std::sinh(t) / t; };
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, x, 15, 1e-14, &error);
}

double f0_real(double x) { return x * std::exp(shi_series(x)); }

double covering_radius_series() { return std::exp(-shi_series(1.0)); }
double covering_radius_quadrature() { return std::exp(-shi_quadrature(1.0)); }

GrowthRecord growth_distortion(double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "growth radius must lie in (0, 1)");
  GrowthRecord g;
  g.r = r;
  g.shi_series = shi_series(r);
  g.shi_quadrature = shi_quadrature(r);
  g.upper = r * std::exp(g.shi_series);
  g.lower = -f0_real(-r);
  g.deriv_bound = (1.0 + std::sinh(r)) * g.upper / r;
  g.covering = covering_radius_series();
  return g;
}

}  // namespace gsh
