#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsh/random.hpp"
#include "gsh/series.hpp"

namespace gsh {

/// Finite Herglotz average k(z) = sum_j w_j (1 + eta_j z)/(1 - eta_j z).
/// Nonnegative weights summing to one and |eta_j| <= 1 put k in the
/// Caratheodory class: k(0) = 1 and Re k > 0 on the disk.
struct HerglotzSample {
  std::vector<double> weights;
  std::vector<cplx> nodes;

  /// Throws InvalidArgument when the weights or nodes are out of range.
  void validate() const;
};

/// omega(z) = rotation * z * prod_j (z - a_j)/(1 - conj(a_j) z), |a_j| < 1.
struct SchwarzSample {
  cplx rotation{1.0, 0.0};
  std::vector<cplx> zeros;

  void validate() const;
  /// Closed-form value; exact Schwarz map on the closed disk.
  cplx operator()(cplx z) const;
  TruncatedSeries series(int order = kDefaultOrder) const;

  /// omega(z) = z^power: the Blaschke product with power-1 zeros at the origin.
  static SchwarzSample monomial(int power, cplx rotation = 1.0);
};

struct SamplerOptions {
  int max_atoms = 6;
  int max_zeros = 4;
  /// Probability of drawing a perturbed boundary configuration.
  double boundary_bias = 0.3;
  /// Herglotz nodes are drawn with |eta| <= this.
  double max_node_modulus = 1.0;
  /// Blaschke zeros are drawn with |a| <= this (keeps series tails short).
  double max_zero_modulus = 0.95;
};

HerglotzSample random_herglotz(Rng& rng, const SamplerOptions& options = {});
SchwarzSample random_schwarz(Rng& rng, const SamplerOptions& options = {});

/// c_n = 2 sum_j w_j eta_j^n for n = 1..upto; element 0 holds c_0 = 1.
std::vector<cplx> caratheodory_coeffs(const HerglotzSample& k, int upto);

/// Series of k built by summing the kernels as series (independent of the
/// closed-form coefficient formula).
TruncatedSeries herglotz_series(const HerglotzSample& k, int order = kDefaultOrder);

/// (1 + omega)/(1 - omega) for a series with omega_0 = 0.
TruncatedSeries from_schwarz(const TruncatedSeries& omega);
TruncatedSeries from_schwarz(const SchwarzSample& omega, int order = kDefaultOrder);

/// (k - 1)/(k + 1): the Schwarz function behind a Caratheodory series.
TruncatedSeries schwarz_from_caratheodory(const TruncatedSeries& k);

/// Rotates c_n -> c_n e^{-i n arg c_1} so that c_1 is real and nonnegative.
/// The representation below assumes this normalization.
std::vector<cplx> rotate_to_real_c1(std::span<const cplx> c);

struct LcTolerances {
  /// |c_1| within this of 2 leaves x undetermined.
  double c1 = 1e-9;
  /// 1 - |x|^2 at or below this leaves z undetermined.
  double z_solve = 1e-12;
  /// Additionally treat x as undetermined when |4 - c_1^2| is at or below
  /// this, and z when |4 - c_1^2| (1 - |x|^2) is. 0 disables.
  double conditioning = 0.0;
};

/// Solutions x, z of
///   2 c2 = c1^2 + x (4 - c1^2),
///   4 c3 = c1^3 + 2(4 - c1^2) c1 x - (4 - c1^2) c1 x^2 + 2(4 - c1^2)(1 - |x|^2) z.
struct LcWitnesses {
  std::optional<cplx> x;
  std::optional<cplx> z;
  bool x_valid = false;
  bool z_valid = false;

  bool degenerate() const noexcept { return !x || !z; }
};

LcWitnesses lemma_lc_witnesses(cplx c1, cplx c2, cplx c3, const LcTolerances& tol = {});

/// Sharp bound on |c2 - nu c1^2| for real nu (three cases).
double fekete_szego_p_bound(double nu);
/// 2 max{1, |2 lambda - 1|}: bound on |c2 - lambda c1^2| for complex lambda.
double fekete_szego_p_bound(cplx lambda);

/// 2|a| + 2|b - 2a| + 2|a - b + d|, an upper bound for |a c1^3 - b c1 c2 + d c3|.
double lj_bound(cplx a, cplx b, cplx d);

/// Side conditions under which |l c1^4 + r c2^2 + 2m c1 c3 - (3/2) n c1^2 c2 - c4| <= 2.
bool la_condition(double l, double r, double m, double n);
cplx la_functional(double l, double r, double m, double n, std::span<const cplx> c);

struct LemmaViolation {
  std::size_t index = 0;
  std::string check;
  HerglotzSample sample;
  double value = 0.0;
  double bound = 0.0;
};

struct LemmaSuiteReport {
  std::size_t samples = 0;
  std::size_t cn_violations = 0;          // |c_n| <= 2, n <= 8
  std::size_t fs_complex_violations = 0;  // |c2 - lambda c1^2| <= 2 max{1,|2 lambda - 1|}
  std::size_t fs_real_violations = 0;     // three-case bound
  std::size_t lj_violations = 0;          // random a, b, d in the unit bidisk
  std::size_t la_violations = 0;          // conclusion under la_condition
  std::size_t la_condition_hits = 0;
  std::size_t lc_invalid = 0;             // witness neither valid nor flagged
  std::size_t lc_degenerate = 0;
  double max_cn = 0.0;
  double max_lj_ratio = 0.0;
  double max_la_value = 0.0;
  double max_witness_modulus = 0.0;
  std::optional<LemmaViolation> first_violation;

  std::size_t total_violations() const noexcept {
    return cn_violations + fs_complex_violations + fs_real_violations + lj_violations +
           la_violations + lc_invalid;
  }
};

/// Checks all lemma inequalities on the given P-class members. The extra
/// random parameters (lambda, nu, a, b, d, l, r, m, n) of sample i come from
/// sample_rng(seed, i).
LemmaSuiteReport empirical_lemma_suite(std::span<const HerglotzSample> samples, std::uint64_t seed);

/// Draws `samples` random members and runs the suite.
LemmaSuiteReport empirical_lemma_suite(std::size_t samples, std::uint64_t seed,
                                       const SamplerOptions& options = {});

}  // namespace gsh
