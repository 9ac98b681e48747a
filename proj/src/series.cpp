#include "gsh/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gsh/error.hpp"

namespace gsh {

namespace {

bool is_finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_order(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation order");
}

// exp(s) for s_0 == 0: k e_k = sum_{j=1..k} j s_j e_{k-j}.
TruncatedSeries exp_zero_constant(const TruncatedSeries& s) {
  const int n = s.order();
  std::vector<cplx> e(static_cast<size_t>(n) + 1);
  e[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    cplx acc{};
    for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * s[j] * e[static_cast<size_t>(k - j)];
    e[static_cast<size_t>(k)] = acc / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(e));
}

// log(s) with s_0 != 0: s l' = s'  =>  k s_0 l_k = k s_k - sum_{j=1..k-1} j l_j s_{k-j}.
TruncatedSeries log_nonzero_constant(const TruncatedSeries& s) {
  const int n = s.order();
  std::vector<cplx> l(static_cast<size_t>(n) + 1);
  l[0] = std::log(s[0]);
  for (int k = 1; k <= n; ++k) {
    cplx acc = static_cast<double>(k) * s[k];
    for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[static_cast<size_t>(j)] * s[k - j];
    l[static_cast<size_t>(k)] = acc / (static_cast<double>(k) * s[0]);
  }
  return TruncatedSeries(std::move(l));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<size_t>(order) + 1, cplx{});
}

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(cplx{});
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (!is_finite(coeffs_[k]))
      throw Error(ErrorCode::NonFinite, "coefficient " + std::to_string(k) + " is not finite");
  }
}

TruncatedSeries TruncatedSeries::constant(cplx value, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) { return monomial(1, 1.0, order); }

TruncatedSeries TruncatedSeries::monomial(int power, cplx coeff, int order) {
  if (power < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
  TruncatedSeries s(order);
  if (power <= order) s.coeffs_[static_cast<size_t>(power)] = coeff;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  require_order(order);
  TruncatedSeries s(order);
  const int n = std::min(order, this->order());
  std::copy_n(coeffs_.begin(), n + 1, s.coeffs_.begin());
  return s;
}

TruncatedSeries TruncatedSeries::shifted_up() const {
  TruncatedSeries s(order());
  for (int k = 1; k <= order(); ++k) s.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k - 1)];
  return s;
}

TruncatedSeries TruncatedSeries::shifted_down() const {
  if (coeffs_[0] != cplx{}) throw Error(ErrorCode::NonzeroInnerConstant, "s/z needs s_0 == 0");
  if (order() == 0) return TruncatedSeries(0);
  return TruncatedSeries(std::vector<cplx>(coeffs_.begin() + 1, coeffs_.end()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(static_cast<size_t>(std::min(order(), other.order())) + 1);
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(static_cast<size_t>(std::min(order(), other.order())) + 1);
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(cplx scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  double worst = 0.0;
  for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

TruncatedSeries operator+(TruncatedSeries a, cplx c) { return a += TruncatedSeries::constant(c, a.order()); }
TruncatedSeries operator-(TruncatedSeries a, cplx c) { return a -= TruncatedSeries::constant(c, a.order()); }

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<cplx> out(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const cplx ai = a[i];
    if (ai == cplx{}) continue;
    for (int j = 0; i + j <= n; ++j) out[static_cast<size_t>(i + j)] += ai * b[j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b, double tolerance) {
  if (std::abs(b[0]) <= tolerance)
    throw Error(ErrorCode::NearZeroConstantTerm, "divisor constant term is (near) zero");
  const int n = std::min(a.order(), b.order());
  std::vector<cplx> q(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    cplx acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[static_cast<size_t>(k - j)];
    q[static_cast<size_t>(k)] = acc / b[0];
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return div(a, b); }

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != cplx{})
    throw Error(ErrorCode::NonzeroInnerConstant, "inner series must vanish at 0");
  const int n = std::min(outer.order(), inner.order());
  const TruncatedSeries v = inner.truncated(n);
  TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) acc = mul(acc, v) + outer[k];
  return acc;
}

TruncatedSeries maclaurin(Transcendental kind, int order) {
  require_order(order);
  std::vector<cplx> c(static_cast<size_t>(order) + 1);
  double factorial = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) factorial *= k;
    const bool odd = (k % 2) == 1;
    switch (kind) {
      case Transcendental::Exp: c[static_cast<size_t>(k)] = 1.0 / factorial; break;
      case Transcendental::Sinh: c[static_cast<size_t>(k)] = odd ? 1.0 / factorial : 0.0; break;
      case Transcendental::Cosh: c[static_cast<size_t>(k)] = odd ? 0.0 : 1.0 / factorial; break;
      case Transcendental::Log:
        throw Error(ErrorCode::InvalidArgument, "log has no Maclaurin expansion at 0");
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries transcend(Transcendental kind, const TruncatedSeries& s, double tolerance) {
  const cplx s0 = s[0];
  TruncatedSeries rest = s;
  rest -= TruncatedSeries::constant(s0, s.order());

  switch (kind) {
    case Transcendental::Exp: {
      auto e = exp_zero_constant(rest);
      return s0 == cplx{} ? e : e * std::exp(s0);
    }
    case Transcendental::Sinh:
    case Transcendental::Cosh: {
      const auto ep = exp_zero_constant(rest);
      const auto em = exp_zero_constant(-rest);
      const auto sh = (ep - em) * 0.5;
      const auto ch = (ep + em) * 0.5;
      if (kind == Transcendental::Sinh) return sh * std::cosh(s0) + ch * std::sinh(s0);
      return ch * std::cosh(s0) + sh * std::sinh(s0);
    }
    case Transcendental::Log:
      if (std::abs(s0) <= tolerance)
        throw Error(ErrorCode::NearZeroConstantTerm, "log of a series with (near) zero constant term");
      return log_nonzero_constant(s);
  }
  return s;
}

TruncatedSeries integrate_ratio(const TruncatedSeries& q) {
  if (q[0] != cplx{1.0, 0.0}) throw Error(ErrorCode::NonUnitConstant, "q(0) must equal 1");
  std::vector<cplx> c(static_cast<size_t>(q.order()) + 1);
  for (int k = 1; k <= q.order(); ++k) c[static_cast<size_t>(k)] = q[k] / static_cast<double>(k);
  return TruncatedSeries(std::move(c));
}

cplx evaluate(const TruncatedSeries& s, cplx z) {
  cplx acc{};
  for (int k = s.order(); k >= 0; --k) acc = acc * z + s[k];
  return acc;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
  if (s.order() == 0) return TruncatedSeries(0);
  std::vector<cplx> d(static_cast<size_t>(s.order()));
  for (int k = 0; k < s.order(); ++k) d[static_cast<size_t>(k)] = static_cast<double>(k + 1) * s[k + 1];
  return TruncatedSeries(std::move(d));
}

}  // namespace gsh
