#include "gsh/function.hpp"

#include "gsh/error.hpp"

namespace gsh {

NormalizedFunction::NormalizedFunction(TruncatedSeries series) : series_(std::move(series)) {
  if (series_.order() < 1 || series_[0] != cplx{} || series_[1] != cplx{1.0, 0.0})
    throw Error(ErrorCode::InvalidArgument, "normalized function needs a_0 = 0 and a_1 = 1");
}

NormalizedFunction NormalizedFunction::identity(int order) {
  return NormalizedFunction(TruncatedSeries::identity(order));
}

NormalizedFunction NormalizedFunction::koebe(int order) {
  std::vector<cplx> c(static_cast<size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) c[static_cast<size_t>(n)] = static_cast<double>(n);
  return NormalizedFunction(TruncatedSeries(std::move(c)));
}

NormalizedFunction NormalizedFunction::from_tail(std::span<const cplx> tail, int order) {
  std::vector<cplx> c(static_cast<size_t>(order) + 1);
  c[1] = 1.0;
  for (size_t j = 0; j < tail.size() && j + 2 <= static_cast<size_t>(order); ++j) c[j + 2] = tail[j];
  return NormalizedFunction(TruncatedSeries(std::move(c)));
}

NormalizedFunction blend(double mu, const NormalizedFunction& f1, const NormalizedFunction& f2) {
  auto s = f1.series() * mu + f2.series() * (1.0 - mu);
  std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
  c[0] = 0.0;
  c[1] = 1.0;
  return NormalizedFunction(TruncatedSeries(std::move(c)));
}

NormalizedFunction scale_toward_identity(const NormalizedFunction& f, double t) {
  std::vector<cplx> c(f.series().coeffs().begin(), f.series().coeffs().end());
  for (size_t n = 2; n < c.size(); ++n) c[n] *= t;
  return NormalizedFunction(TruncatedSeries(std::move(c)));
}

NormalizedFunction member_from_witness(const TruncatedSeries& omega) {
  if (omega[0] != cplx{}) throw Error(ErrorCode::NonzeroInnerConstant, "witness must vanish at 0");
  const auto q = sinh(omega) + 1.0;
  return NormalizedFunction(exp(integrate_ratio(q)).shifted_up());
}

NormalizedFunction member_from_witness(const SchwarzSample& omega, int order) {
  return member_from_witness(omega.series(order));
}

NormalizedFunction member_from_caratheodory(const HerglotzSample& k, int order) {
  return member_from_witness(schwarz_from_caratheodory(herglotz_series(k, order)));
}

NormalizedFunction extremal_fn(int n, int order) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "extremal_fn needs n >= 2");
  return member_from_witness(SchwarzSample::monomial(n - 1), order);
}

TruncatedSeries ratio_series(const NormalizedFunction& f) {
  return div(derivative(f.series()), f.series().shifted_down());
}

std::array<cplx, 4> coeffs_from_caratheodory(std::span<const cplx, 4> c) {
  const cplx c1 = c[0], c2 = c[1], c3 = c[2], c4 = c[3];
  return {c1 / 2.0, c2 / 4.0, c1 * c1 * c1 / 144.0 - c1 * c2 / 24.0 + c3 / 6.0,
          -5.0 * std::pow(c1, 4) / 1152.0 + 5.0 * c1 * c1 * c2 / 192.0 - c1 * c3 / 24.0 - c2 * c2 / 32.0 +
              c4 / 8.0};
}

HankelReport hankel_report(std::span<const cplx> a, cplx lambda) {
  if (a.size() < 4) throw Error(ErrorCode::InvalidArgument, "hankel_report needs a_2..a_5");
  const cplx a2 = a[0], a3 = a[1], a4 = a[2], a5 = a[3];
  HankelReport r;
  r.fs = a3 - lambda * a2 * a2;
  r.t = a4 - a2 * a3;
  r.h22 = a2 * a4 - a3 * a3;
  r.h31 = a3 * r.h22 - a4 * r.t + a5 * (a3 - a2 * a2);
  return r;
}

HankelReport hankel_report(const NormalizedFunction& f, cplx lambda) {
  if (f.order() < 5) throw Error(ErrorCode::InvalidArgument, "hankel_report needs order >= 5");
  const std::array<cplx, 4> a{f.coeff(2), f.coeff(3), f.coeff(4), f.coeff(5)};
  return hankel_report(a, lambda);
}

}  // namespace gsh
