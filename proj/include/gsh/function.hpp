#pragma once

#include <array>
#include <span>

#include "gsh/caratheodory.hpp"
#include "gsh/series.hpp"

namespace gsh {

/// f(z) = z + a_2 z^2 + ... : a_0 == 0 and a_1 == 1 exactly.
class NormalizedFunction {
 public:
  /// Throws InvalidArgument unless coefficient 0 is 0 and coefficient 1 is 1.
  explicit NormalizedFunction(TruncatedSeries series);

  static NormalizedFunction identity(int order = kDefaultOrder);
  /// z/(1 - z)^2.
  static NormalizedFunction koebe(int order = kDefaultOrder);
  /// z + sum_{n>=2} tail[n-2] z^n.
  static NormalizedFunction from_tail(std::span<const cplx> tail, int order = kDefaultOrder);

  const TruncatedSeries& series() const noexcept { return series_; }
  int order() const noexcept { return series_.order(); }
  cplx coeff(int n) const { return series_[n]; }
  cplx operator()(cplx z) const { return evaluate(series_, z); }

 private:
  TruncatedSeries series_;
};

/// mu f1 + (1 - mu) f2 (normalization is preserved).
NormalizedFunction blend(double mu, const NormalizedFunction& f1, const NormalizedFunction& f2);

/// z + t (f - z): pulls f toward the identity.
NormalizedFunction scale_toward_identity(const NormalizedFunction& f, double t);

/// The member with z f'/f = 1 + sinh(omega): f = z exp(\int_0^z sinh(omega(t))/t dt).
NormalizedFunction member_from_witness(const TruncatedSeries& omega);
NormalizedFunction member_from_witness(const SchwarzSample& omega, int order = kDefaultOrder);
/// Witness omega = (k - 1)/(k + 1) from a Caratheodory function.
NormalizedFunction member_from_caratheodory(const HerglotzSample& k, int order = kDefaultOrder);

/// f(z) = z exp \int_0^z sinh(t^{n-1})/t dt, the sharpness witness for |a_n|.
NormalizedFunction extremal_fn(int n, int order = kDefaultOrder);

/// f0 = extremal_fn(2): z exp(Shi(z)).
inline NormalizedFunction f0(int order = kDefaultOrder) { return extremal_fn(2, order); }

/// z f'(z)/f(z), computed as f'/(f/z); order drops by one.
TruncatedSeries ratio_series(const NormalizedFunction& f);

/// (a_2, a_3, a_4, a_5) from c_1..c_4 of the Caratheodory function behind the witness.
std::array<cplx, 4> coeffs_from_caratheodory(std::span<const cplx, 4> c);

struct HankelReport {
  cplx fs;   // a3 - lambda a2^2
  cplx t;    // a4 - a2 a3
  cplx h22;  // a2 a4 - a3^2
  cplx h31;  // a3 (a2 a4 - a3^2) - a4 (a4 - a2 a3) + a5 (a3 - a2^2)
};

HankelReport hankel_report(std::span<const cplx> a2_to_a5, cplx lambda = 1.0);
/// Throws InvalidArgument when the order is below 5.
HankelReport hankel_report(const NormalizedFunction& f, cplx lambda = 1.0);

}  // namespace gsh
