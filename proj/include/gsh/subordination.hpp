#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsh/function.hpp"
#include "gsh/membership.hpp"

namespace gsh {

/// Janowski target (1 + A z)/(1 + B z) with -1 <= B < A <= 1.
struct JanowskiParams {
  double A = 1.0;
  double B = 0.0;

  void validate() const;
  cplx operator()(cplx z) const { return (1.0 + A * z) / (1.0 + B * z); }
};

enum class OperatorKind { P1 = 1, P2, P3, P4 };
enum class ConclusionTarget { OnePlusSinh, SqrtOnePlusZ };

const char* to_string(OperatorKind kind) noexcept;

struct ImplicationCase {
  OperatorKind kind = OperatorKind::P1;
  cplx alpha = 1.0;
  JanowskiParams janowski;
};

/// |cosh e^{i theta}|^2 and |sinh e^{i theta}|^2 written with real functions.
double cosh_modulus_sq(double theta);
double sinh_modulus_sq(double theta);

struct TrigExtrema {
  double cosh_min = 0.0, cosh_min_theta = 0.0;
  double cosh_max = 0.0, cosh_max_theta = 0.0;
  double sinh_min = 0.0, sinh_min_theta = 0.0;
  double sinh_max = 0.0, sinh_max_theta = 0.0;
  /// max |Psi(theta) - Psi(-theta)| and the same for Theta over the grid.
  double max_asymmetry = 0.0;
};

/// Extrema of |cosh e^{i theta}| and |sinh e^{i theta}| over theta in [-pi, pi]:
/// grid search then golden-section refinement. Requires theta_samples >= 1024.
TrigExtrema trig_extrema(int theta_samples = 4096);

/// Threshold on |alpha| for each operator kind (P1 uses |B|, the others B):
///   P1: (A-B) / (1 + cos 1 - sin 1 - |B| (1 + sinh 1 + cosh 1))
///   P2: (A-B)(1 + sinh 1) / (1 + cos 1 - sin 1 - B (1 + cosh 1 + sinh 1))
///   P3, P4: as P2 with (1 + sinh 1)^2 and (1 + sinh 1)^3.
/// std::nullopt when the denominator is not positive.
std::optional<double> alpha_threshold(OperatorKind kind, const JanowskiParams& params);

/// sup_v |(v - 1)/(A - B v)|; +inf if some A - B v vanishes.
double janowski_deviation(std::span<const cplx> values, const JanowskiParams& params);

inline constexpr double kPremiseMargin = 1e-6;

struct ImplicationRecord {
  OperatorKind kind = OperatorKind::P1;
  JanowskiParams janowski;
  cplx alpha;
  double deviation = 0.0;
  bool premise_holds = false;
  bool conclusion_holds = false;       // f(z)/z - 1 inside sinh(D)
  bool conclusion_sqrt_holds = false;  // f(z)/z - 1 inside sqrt(1 + D) - 1
  bool vacuous = true;
  double scale = 1.0;  // coefficients of f were scaled by this toward z
};

/// Evaluates the premise on the polar grid via janowski_deviation and both
/// conclusions by range containment. Throws ZeroDivisorOnGrid for P2..P4 when
/// min |f(z)/z| <= 1e-8 on the grid.
ImplicationRecord verify_implication(const NormalizedFunction& f, const ImplicationCase& c, const PolarGrid& grid);

struct CorollaryResult {
  /// The operator exactly as displayed, built from g.
  TruncatedSeries op;
  /// The implication operator applied to l = z^2 g'/g.
  TruncatedSeries reduced;
  /// max |z l' - (z^2 g'/g)(2 + z g''/g' - z g'/g)| coefficientwise.
  double identity_residual = 0.0;
  /// max |op - reduced| coefficientwise.
  double reduction_residual = 0.0;
};

/// Corollary operators:
///   P1: 1 + alpha (z^2 g'/g)(2 + z g''/g' - z g'/g)
///   P2: 1 + alpha (2 + z g''/g' - z g'/g)
///   P3: 1 + alpha (g/(z g'))(2 + ...)
///   P4: 1 + alpha (g^2/(z g')^2)(2 + ...)
/// Division failures propagate as NearZeroConstantTerm.
CorollaryResult corollary_operator(const NormalizedFunction& g, OperatorKind kind, cplx alpha);

struct HarnessConfig {
  std::size_t functions = 500;
  std::uint64_t seed = 1;
  int order = 24;
  PolarGrid grid{128, 32, 0.995};
  double alpha_factor = 1.05;
  std::vector<JanowskiParams> janowski{{1.0, 0.0}, {0.5, -0.5}, {0.8, 0.2}};
  std::size_t min_non_vacuous = 50;
  /// Largest number of halvings of the coefficients when pulling f toward z.
  int max_halvings = 12;
};

struct HarnessSummary {
  OperatorKind kind = OperatorKind::P1;
  JanowskiParams janowski;
  std::optional<double> threshold;
  double alpha = 0.0;
  std::size_t cases = 0;
  std::size_t non_vacuous = 0;
  std::size_t counterexamples = 0;       // premise true, sinh conclusion false
  std::size_t sqrt_counterexamples = 0;  // reported only
  /// B < 0, where the |B| of the P1 threshold and the bare B of P2..P4 differ.
  bool b_sign_flag = false;
};

struct HarnessReport {
  std::vector<HarnessSummary> summaries;
  std::vector<ImplicationRecord> records;
  std::vector<std::vector<cplx>> functions;  // coefficient list of records[i]

  std::size_t counterexamples() const;
};

/// For every kind and Janowski pair with a defined threshold, samples f
/// (small-coefficient polynomials and witness-built members), sets
/// alpha = alpha_factor * threshold and pulls f toward z until the premise
/// holds or the halving budget runs out.
HarnessReport run_implication_harness(const HarnessConfig& cfg);

}  // namespace gsh
