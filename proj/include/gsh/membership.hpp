#pragma once

#include <functional>

#include "gsh/containment.hpp"
#include "gsh/function.hpp"

namespace gsh {

/// z = r e^{i phi} with r = max_radius (j+1)/radii and phi = 2 pi k / angles.
struct PolarGrid {
  int angles = 512;
  int radii = 64;
  double max_radius = 0.995;

  void validate() const;
  template <class Fn>
  void for_each(Fn&& fn) const;
};

template <class Fn>
void PolarGrid::for_each(Fn&& fn) const {
  for (int j = 0; j < radii; ++j) {
    const double r = max_radius * (j + 1) / radii;
    for (int k = 0; k < angles; ++k) fn(std::polar(r, 6.283185307179586 * k / angles));
  }
}

/// beta = (1 + sinh e^{i theta}) / sinh e^{i theta}.
struct KernelParams {
  double theta = 0.0;
  cplx beta;

  static KernelParams at(double theta);
};

/// |(n - (1 + s)) / s| with s = sinh e^{i theta}.
double sufficient_weight(int n, double theta);

struct SufficientResult {
  bool holds = false;  // false means inconclusive: the condition is only sufficient
  double sup_statistic = 0.0;
  double argmax_theta = 0.0;
};

/// sup over theta of sum_{n>=2} |(n - 1 - sinh e^{i theta}) / sinh e^{i theta}| |a_n|,
/// on a theta grid refined by golden section around the largest samples.
/// Throws InvalidArgument when theta_samples < 64.
SufficientResult sufficient_membership(const NormalizedFunction& f, int theta_samples = 512);

struct KernelResult {
  bool nonvanishing = false;
  double min_modulus = 0.0;
  double argmin_theta = 0.0;
  cplx argmin_z;
  /// min |f(z)/z| over the grid (the beta = 1 case).
  double min_f_over_z = 0.0;
};

inline constexpr double kKernelZeroTolerance = 1e-6;

/// Scans E(z, theta) = f'(z) - beta_theta (f'(z) - f(z)/z), i.e. (1/z)(f * (z - beta z^2)/(1 - z)^2),
/// over theta and the polar grid; the smallest grid values are polished by
/// Newton steps in z (kept inside the grid radius).
KernelResult kernel_nonvanishing(const NormalizedFunction& f, int theta_samples = 512, const PolarGrid& grid = {},
                                 double zero_tolerance = kKernelZeroTolerance);

struct GeometricResult {
  bool member = false;
  bool boundary_ambiguity = false;
  /// Largest signed distance of G(z) = z f'/f - 1 to the curve sinh(e^{it})
  /// over the grid: negative inside, positive outside.
  double max_excursion = 0.0;
  cplx argmax_z;
  double max_abs_g = 0.0;
  /// Rough bound on the neglected coefficient tail of f at the grid radius.
  double tail_estimate = 0.0;
  /// |max_excursion| is below tail_estimate, so truncation could flip the verdict.
  bool near_threshold = false;
};

inline constexpr double kBoundaryAmbiguity = 1e-9;

/// Range containment of z f'/f - 1 in sinh(D) plus G(0) = 0 (sinh is univalent
/// on the disk, so this is the subordination). Points within 1e-9 of the
/// boundary make the verdict conservatively non-member.
GeometricResult geometric_membership(const NormalizedFunction& f, const PolarGrid& grid = {});
GeometricResult geometric_membership(const NormalizedFunction& f, const PolarGrid& grid, const ClosedCurve& boundary);

/// Signed distance from values of a series to a region boundary, shared with
/// the subordination checks.
struct RegionScan {
  bool inside = true;
  bool ambiguous = false;
  double max_excursion = -1e300;
  cplx argmax_z;
  double max_abs = 0.0;
};

RegionScan scan_region(const TruncatedSeries& g, const PolarGrid& grid, const ClosedCurve& boundary);
RegionScan scan_region(const std::function<cplx(cplx)>& g, const PolarGrid& grid,
                       const ClosedCurve& boundary);

enum class Verdict { Member, NonMember, Inconclusive };
const char* to_string(Verdict v) noexcept;

struct MembershipReport {
  SufficientResult sufficient;
  KernelResult kernel;
  GeometricResult geometric;
  Verdict combined = Verdict::Inconclusive;
};

struct MembershipOptions {
  int theta_samples = 512;
  PolarGrid grid;
};

MembershipReport membership_report(const NormalizedFunction& f, const MembershipOptions& options = {});

struct ComboSpec {
  double mu = 0.5;
  NormalizedFunction f1;
  NormalizedFunction f2;
};

/// Throws PreconditionNotMet when f1 or f2 fails the sufficient test, and
/// InvalidArgument when mu is outside [0, 1].
SufficientResult convex_combination_check(const ComboSpec& spec, int theta_samples = 512);

}  // namespace gsh
