#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gsh {

using cplx = std::complex<double>;

inline constexpr int kDefaultOrder = 32;
inline constexpr double kDivisorTolerance = 1e-14;

/// Complex power series truncated after z^order.
///
/// Coefficient k of any result depends only on coefficients 0..k of the
/// operands, so all binary operations are exact to min(order_a, order_b).
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(int order = kDefaultOrder);
  /// Takes coefficients 0..N; the order is N. Throws on non-finite input.
  explicit TruncatedSeries(std::vector<cplx> coeffs);

  static TruncatedSeries constant(cplx value, int order = kDefaultOrder);
  /// The series z.
  static TruncatedSeries identity(int order = kDefaultOrder);
  static TruncatedSeries monomial(int power, cplx coeff = 1.0, int order = kDefaultOrder);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  cplx operator[](int k) const { return k <= order() ? coeffs_[static_cast<size_t>(k)] : cplx{}; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  /// Copy reduced (or zero-extended) to a new order.
  TruncatedSeries truncated(int order) const;
  /// z * s; the order is kept, so the top coefficient of s is dropped.
  TruncatedSeries shifted_up() const;
  /// s / z for s with s_0 == 0; order drops by one.
  TruncatedSeries shifted_down() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(cplx scale);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, cplx s) { return a *= s; }
  friend TruncatedSeries operator*(cplx s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= -1.0; }

  /// Largest |a_k - b_k| over the common order.
  friend double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<cplx> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, cplx c);
TruncatedSeries operator-(TruncatedSeries a, cplx c);

/// Cauchy product.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// a / b. Throws NearZeroConstantTerm when |b_0| <= tolerance.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b,
                    double tolerance = kDivisorTolerance);
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

/// outer(inner(z)) by nested Horner multiplication. inner_0 must be exactly 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

enum class Transcendental { Exp, Log, Sinh, Cosh };

/// exp/log/sinh/cosh of a series. A nonzero constant term is split off
/// analytically; log uses the principal branch and rejects |s_0| <= tolerance.
TruncatedSeries transcend(Transcendental kind, const TruncatedSeries& s,
                          double tolerance = kDivisorTolerance);
inline TruncatedSeries exp(const TruncatedSeries& s) { return transcend(Transcendental::Exp, s); }
inline TruncatedSeries log(const TruncatedSeries& s) { return transcend(Transcendental::Log, s); }
inline TruncatedSeries sinh(const TruncatedSeries& s) { return transcend(Transcendental::Sinh, s); }
inline TruncatedSeries cosh(const TruncatedSeries& s) { return transcend(Transcendental::Cosh, s); }

/// Maclaurin series of exp, sinh or cosh (log is rejected: no expansion at 0).
TruncatedSeries maclaurin(Transcendental kind, int order = kDefaultOrder);

/// The series of \int_0^z (q(t) - 1)/t dt. q_0 must be exactly 1.
TruncatedSeries integrate_ratio(const TruncatedSeries& q);

/// Horner sum. Truncation error grows with |z|; callers keep |z| <= 1.
cplx evaluate(const TruncatedSeries& s, cplx z);

/// Order drops by one.
TruncatedSeries derivative(const TruncatedSeries& s);

}  // namespace gsh
