#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using rational = boost::multiprecision::cpp_rational;

// Taylor coefficients 0..n of an analytic F by the trapezoid rule on |z| = r.
inline std::vector<cplx> cauchy_coeffs(const std::function<cplx(cplx)>& F, int n, double r = 0.5, int points = 256) {
  std::vector<cplx> out(n + 1);
  std::vector<cplx> values(points);
  for (int k = 0; k < points; ++k) values[k] = F(std::polar(r, 2.0 * std::numbers::pi * k / points));
  for (int m = 0; m <= n; ++m) {
    cplx acc = 0.0;
    for (int k = 0; k < points; ++k) acc += values[k] * std::polar(1.0, -2.0 * std::numbers::pi * k * m / points);
    out[m] = acc / (points * std::pow(r, m));
  }
  return out;
}

inline rational factorial(int n) {
  rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Coefficients of exp(s) for s with s_0 = 0, by expanding sum s^k / k!.
inline std::vector<rational> exp_series(const std::vector<rational>& s) {
  const std::size_t n = s.size();
  std::vector<rational> out(n, 0), power(n, 0);
  power[0] = 1;
  out[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<rational> next(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 1; i + j < n; ++j) next[i + j] += power[i] * s[j];
    power = next;
    for (std::size_t i = 0; i < n; ++i) out[i] += power[i] / factorial(static_cast<int>(k));
  }
  return out;
}

// a_0..a_n of z exp(Shi(z)) in exact arithmetic.
inline std::vector<rational> f0_exact(int n) {
  std::vector<rational> shi(n, 0);
  for (int k = 1; k < n; k += 2) shi[k] = rational(1) / (factorial(k) * k);
  const auto e = exp_series(shi);
  std::vector<rational> out(n + 1, 0);
  for (int k = 0; k < n; ++k) out[k + 1] = e[k];
  return out;
}

inline double to_double(const rational& q) { return q.convert_to<double>(); }

// Composite Simpson on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& g, double a, double b, int panels = 20000) {
  const double h = (b - a) / panels;
  double acc = g(a) + g(b);
  for (int i = 1; i < panels; ++i) acc += g(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Shi(x) = int_0^x sinh(t)/t dt
inline double shi(double x) {
  return simpson([](double t) { return t == 0.0 ? 1.0 : std::sinh(t) / t; }, 0.0, x);
}

}  // namespace oracle
