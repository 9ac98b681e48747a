#pragma once

#include <functional>

namespace gsh {

struct LineMax {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of a unimodal function on [lo, hi].
/// Stops when the bracket is narrower than `tolerance`. The returned point is
/// the best one evaluated, including the endpoints.
LineMax golden_section_maximize(const std::function<double(double)>& fn, double lo, double hi,
                                double tolerance = 1e-10, int max_iterations = 200);

inline LineMax golden_section_minimize(const std::function<double(double)>& fn, double lo, double hi,
                                       double tolerance = 1e-10, int max_iterations = 200) {
  auto r = golden_section_maximize([&](double x) { return -fn(x); }, lo, hi, tolerance, max_iterations);
  r.value = -r.value;
  return r;
}

}  // namespace gsh
