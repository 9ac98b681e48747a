#include "gsh/membership.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "gsh/error.hpp"
#include "gsh/optimize.hpp"

namespace gsh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Geometric extrapolation of sum_{k>N} |s_k| r^k from the last coefficients.
double tail_estimate(const TruncatedSeries& s, double r) {
  const int n = s.order();
  if (n < 5) return 0.0;
  const double last = std::abs(s[n]);
  const double earlier = std::abs(s[n - 4]);
  if (last == 0.0) return 0.0;
  const double ratio = earlier > 0.0 ? std::pow(last / earlier, 0.25) : 1.0;
  const double q = ratio * r;
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return last * std::pow(r, n) * q / (1.0 - q);
}

// Indices of the `count` largest entries.
std::vector<size_t> top_indices(const std::vector<double>& values, size_t count) {
  std::vector<size_t> idx(values.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  count = std::min(count, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(count), idx.end(),
                    [&](size_t a, size_t b) { return values[a] > values[b] || (values[a] == values[b] && a < b); });
  idx.resize(count);
  return idx;
}

}  // namespace

void PolarGrid::validate() const {
  if (angles < 1 || radii < 1) throw Error(ErrorCode::InvalidArgument, "polar grid needs positive sizes");
  if (!(max_radius > 0.0 && max_radius < 1.0))
    throw Error(ErrorCode::InvalidArgument, "polar grid radius must lie in (0, 1)");
}

KernelParams KernelParams::at(double theta) {
  const cplx s = std::sinh(std::polar(1.0, theta));
  return KernelParams{theta, (1.0 + s) / s};
}

double sufficient_weight(int n, double theta) {
  const cplx s = std::sinh(std::polar(1.0, theta));
  return std::abs((static_cast<double>(n) - (1.0 + s)) / s);
}

SufficientResult sufficient_membership(const NormalizedFunction& f, int theta_samples) {
  if (theta_samples < 64) throw Error(ErrorCode::InvalidArgument, "sufficient test needs >= 64 theta samples");
  std::vector<double> moduli(static_cast<size_t>(f.order()) + 1);
  for (int n = 2; n <= f.order(); ++n) moduli[static_cast<size_t>(n)] = std::abs(f.coeff(n));
  auto statistic = [&](double theta) {
    const cplx s = std::sinh(std::polar(1.0, theta));
    double acc = 0.0;
    for (int n = 2; n <= f.order(); ++n) {
      if (moduli[static_cast<size_t>(n)] == 0.0) continue;
      acc += std::abs((static_cast<double>(n) - (1.0 + s)) / s) * moduli[static_cast<size_t>(n)];
    }
    return acc;
  };

  std::vector<double> values(static_cast<size_t>(theta_samples));
  const double h = kTwoPi / theta_samples;
  for (int k = 0; k < theta_samples; ++k) values[static_cast<size_t>(k)] = statistic(h * k);

  SufficientResult out;
  for (size_t k : top_indices(values, 4)) {
    const double center = h * static_cast<double>(k);
    const auto refined = golden_section_maximize(statistic, center - h, center + h, 1e-10);
    if (refined.value > out.sup_statistic) {
      out.sup_statistic = refined.value;
      out.argmax_theta = std::fmod(refined.x + kTwoPi, kTwoPi);
    }
  }
  out.holds = out.sup_statistic < 1.0;
  return out;
}

KernelResult kernel_nonvanishing(const NormalizedFunction& f, int theta_samples, const PolarGrid& grid,
                                 double zero_tolerance) {
  grid.validate();
  if (theta_samples < 1) throw Error(ErrorCode::InvalidArgument, "kernel test needs theta samples");
  const auto fp = derivative(f.series());
  const auto fpp = derivative(fp);
  const auto g = f.series().shifted_down();  // f/z
  const auto gp = derivative(g);

  std::vector<cplx> points, d1, d2;
  points.reserve(static_cast<size_t>(grid.angles) * static_cast<size_t>(grid.radii));
  KernelResult out;
  out.min_f_over_z = std::numeric_limits<double>::infinity();
  grid.for_each([&](cplx z) {
    const cplx a = evaluate(fp, z);
    const cplx b = evaluate(g, z);
    points.push_back(z);
    d1.push_back(a);
    d2.push_back(a - b);
    out.min_f_over_z = std::min(out.min_f_over_z, std::abs(b));
  });

  struct Candidate {
    double modulus;
    double theta;
    size_t point;
  };
  std::vector<Candidate> best;  // smallest grid values, one per theta
  best.reserve(static_cast<size_t>(theta_samples));
  for (int k = 0; k < theta_samples; ++k) {
    const double theta = kTwoPi * k / theta_samples;
    const cplx beta = KernelParams::at(theta).beta;
    double m = std::numeric_limits<double>::infinity();
    size_t arg = 0;
    for (size_t i = 0; i < points.size(); ++i) {
      const double v = std::abs(d1[i] - beta * d2[i]);
      if (v < m) m = v, arg = i;
    }
    best.push_back({m, theta, arg});
  }
  std::sort(best.begin(), best.end(), [](const Candidate& a, const Candidate& b) {
    return a.modulus < b.modulus || (a.modulus == b.modulus && a.theta < b.theta);
  });

  out.min_modulus = best.front().modulus;
  out.argmin_theta = best.front().theta;
  out.argmin_z = points[best.front().point];

  // Newton polish in z for the most promising thetas.
  const size_t polish = std::min<size_t>(8, best.size());
  for (size_t c = 0; c < polish; ++c) {
    const cplx beta = KernelParams::at(best[c].theta).beta;
    auto e_at = [&](cplx z) { return evaluate(fp, z) - beta * (evaluate(fp, z) - evaluate(g, z)); };
    auto de_at = [&](cplx z) { return evaluate(fpp, z) - beta * (evaluate(fpp, z) - evaluate(gp, z)); };
    cplx z = points[best[c].point];
    for (int it = 0; it < 40; ++it) {
      const cplx e = e_at(z);
      const double m = std::abs(e);
      if (m < out.min_modulus) {
        out.min_modulus = m;
        out.argmin_theta = best[c].theta;
        out.argmin_z = z;
      }
      if (m < 1e-15) break;
      const cplx de = de_at(z);
      if (std::abs(de) == 0.0) break;
      cplx next = z - e / de;
      if (std::abs(next) > grid.max_radius) next *= grid.max_radius / std::abs(next);
      if (std::abs(next - z) < 1e-16) break;
      z = next;
    }
  }
  out.nonvanishing = out.min_modulus > zero_tolerance && out.min_f_over_z > zero_tolerance;
  return out;
}

RegionScan scan_region(const std::function<cplx(cplx)>& g, const PolarGrid& grid,
                       const ClosedCurve& boundary) {
  RegionScan out;
  grid.for_each([&](cplx z) {
    const cplx v = g(z);
    const double r = std::abs(v);
    out.max_abs = std::max(out.max_abs, r);
    double signed_distance;
    if (!std::isfinite(r)) {
      signed_distance = std::numeric_limits<double>::infinity();
      out.inside = false;
    } else if (r < boundary.inner_radius()) {
      signed_distance = r - boundary.inner_radius();  // upper bound for the true (negative) distance
    } else {
      const double d = boundary.distance(v);
      const bool in = r <= boundary.outer_radius() && boundary.winding_number(v) != 0;
      signed_distance = in ? -d : d;
      if (!in) out.inside = false;
      if (d < kBoundaryAmbiguity) out.ambiguous = true;
    }
    if (signed_distance > out.max_excursion) {
      out.max_excursion = signed_distance;
      out.argmax_z = z;
    }
  });
  return out;
}

RegionScan scan_region(const TruncatedSeries& g, const PolarGrid& grid, const ClosedCurve& boundary) {
  return scan_region([&](cplx z) { return evaluate(g, z); }, grid, boundary);
}

GeometricResult geometric_membership(const NormalizedFunction& f, const PolarGrid& grid,
                                     const ClosedCurve& boundary) {
  grid.validate();
  // G is evaluated from the polynomial itself, the same function the kernel test sees.
  const auto& s = f.series();
  const auto ds = derivative(s);
  const auto g = [&](cplx z) {
    if (z == cplx{}) return cplx{};
    return z * evaluate(ds, z) / evaluate(s, z) - 1.0;
  };
  GeometricResult out;
  const auto scan = scan_region(g, grid, boundary);
  out.boundary_ambiguity = scan.ambiguous;
  out.max_excursion = scan.max_excursion;
  out.argmax_z = scan.argmax_z;
  out.max_abs_g = scan.max_abs;
  out.tail_estimate = tail_estimate(s, grid.max_radius);
  out.near_threshold = std::abs(out.max_excursion) <= out.tail_estimate;
  out.member = scan.inside && !scan.ambiguous;
  return out;
}

GeometricResult geometric_membership(const NormalizedFunction& f, const PolarGrid& grid) {
  static const ClosedCurve boundary = ClosedCurve::sinh_boundary(4096);
  return geometric_membership(f, grid, boundary);
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::NonMember: return "non-member";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

MembershipReport membership_report(const NormalizedFunction& f, const MembershipOptions& options) {
  MembershipReport r;
  r.sufficient = sufficient_membership(f, std::max(64, options.theta_samples));
  r.kernel = kernel_nonvanishing(f, options.theta_samples, options.grid);
  r.geometric = geometric_membership(f, options.grid);
  if (r.sufficient.holds || (r.geometric.member && r.kernel.nonvanishing)) {
    r.combined = Verdict::Member;
  } else if (!r.geometric.member && !r.kernel.nonvanishing) {
    r.combined = Verdict::NonMember;
  } else {
    r.combined = Verdict::Inconclusive;
  }
  return r;
}

SufficientResult convex_combination_check(const ComboSpec& spec, int theta_samples) {
  if (!(spec.mu >= 0.0 && spec.mu <= 1.0)) throw Error(ErrorCode::InvalidArgument, "mu must lie in [0, 1]");
  if (!sufficient_membership(spec.f1, theta_samples).holds || !sufficient_membership(spec.f2, theta_samples).holds)
    throw Error(ErrorCode::PreconditionNotMet, "both inputs must pass the sufficient coefficient test");
  return sufficient_membership(blend(spec.mu, spec.f1, spec.f2), theta_samples);
}

}  // namespace gsh
