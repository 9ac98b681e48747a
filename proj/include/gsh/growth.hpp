#pragma once

namespace gsh {

/// Hyperbolic sine integral Shi(x) = \int_0^x sinh(t)/t dt from its Maclaurin
/// series sum_k x^{2k+1} / ((2k+1) (2k+1)!).
double shi_series(double x);
/// The same integral by adaptive Gauss-Kronrod quadrature.
double shi_quadrature(double x);

/// f0(x) = x exp(Shi(x)) on the real axis.
double f0_real(double x);

struct GrowthRecord {
  double r = 0.0;
  double lower = 0.0;        // -f0(-r)
  double upper = 0.0;        // f0(r)
  double deriv_bound = 0.0;  // (1 + sinh r) f0(r) / r
  double covering = 0.0;     // -f0(-1) = exp(-Shi(1))
  double shi_series = 0.0;
  double shi_quadrature = 0.0;
};

/// Sharp growth, distortion and covering values for 0 < r < 1.
/// Throws InvalidArgument outside that range.
GrowthRecord growth_distortion(double r);

/// exp(-Shi(1)) by the series route and by quadrature.
double covering_radius_series();
double covering_radius_quadrature();

}  // namespace gsh
