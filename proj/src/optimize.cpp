#include "gsh/optimize.hpp"

#include <cmath>

namespace gsh {

LineMax golden_section_maximize(const std::function<double(double)>& fn, double lo, double hi,
                                double tolerance, int max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  LineMax best{lo, fn(lo)};
  auto consider = [&](double x, double v) {
    if (v > best.value) best = {x, v};
  };
  consider(hi, fn(hi));

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c), fd = fn(d);
  consider(c, fc);
  consider(d, fd);
  for (int i = 0; i < max_iterations && (b - a) > tolerance; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
      consider(d, fd);
    }
  }
  return best;
}

}  // namespace gsh
