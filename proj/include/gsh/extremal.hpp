#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gsh/caratheodory.hpp"
#include "gsh/function.hpp"

namespace gsh {

struct ScanConfig {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  SamplerOptions sampler;
  /// Truncation order of the members; raised to the functional's need.
  int order = 8;
  double tolerance = 1e-9;
  /// (c, x, z) grid for functionals of a_2..a_4: c in [0, 2], x polar, z on the circle.
  int c_points = 41;
  int x_radii = 8;
  int x_angles = 24;
  int z_angles = 24;
  /// Coordinatewise golden-section polish of the best Schwarz witness.
  bool polish = true;

  void validate() const;
};

/// Point of the (c1, x, z) representation with c1 = c real.
struct LcPoint {
  double c = 0.0;
  cplx x;
  cplx z;
};

using Witness = std::variant<SchwarzSample, HerglotzSample, LcPoint>;

const char* family_name(const Witness& w) noexcept;

struct Functional {
  enum class Kind { Coefficient, FeketeSzego, T, H22, H31 };
  Kind kind = Kind::Coefficient;
  int n = 2;             // Coefficient only
  cplx lambda = 1.0;     // FeketeSzego only

  static Functional coefficient(int n) { return {Kind::Coefficient, n, 1.0}; }
  static Functional fekete_szego(cplx lambda) { return {Kind::FeketeSzego, 2, lambda}; }
  static Functional t() { return {Kind::T, 2, 1.0}; }
  static Functional h22() { return {Kind::H22, 2, 1.0}; }
  static Functional h31() { return {Kind::H31, 2, 1.0}; }

  std::string name() const;
  /// The constant the class is claimed to satisfy.
  double claimed_bound() const;
  /// Highest coefficient index needed.
  int needed_order() const;
  /// Depends on a_2..a_4 only, so the (c, x, z) representation applies.
  bool depends_on_c3_only() const;
  /// |functional| from coefficients a_0..a_k.
  double value(std::span<const cplx> a) const;
};

/// Coefficients a_0..a_order of the member built from a witness. An LcPoint
/// yields a_0..a_4 from the closed-form coefficient formulas.
std::vector<cplx> witness_coefficients(const Witness& w, int order);
double evaluate_witness(const Functional& functional, const Witness& w, int order);

struct BoundEstimate {
  std::string functional;
  double empirical_max = 0.0;
  Witness witness;
  int order = 0;
  double claimed_bound = 0.0;
  double attained_ratio = 0.0;
  bool violation = false;
  double tolerance = 1e-9;
  std::size_t evaluated = 0;
};

BoundEstimate scan(const Functional& functional, const ScanConfig& cfg);

/// |a_n| against 1/(n - 1). Throws InvalidArgument for n < 2.
BoundEstimate scan_coefficient_bound(int n, const ScanConfig& cfg);

enum class HankelKind { H22, H31, FS, T };
BoundEstimate hankel_scan(HankelKind kind, const ScanConfig& cfg, cplx lambda = 1.0);

/// (1/288)(c^4/2 + 6c^2 y(4-c^2) + 6c^2 y^2(4-c^2) + 12c(4-c^2)(1-y^2) + (9/2) y^2 (4-c^2)^2)
double psi_surface(double c, double y);
/// psi(c, 1).
double chi(double c);

struct PsiMax {
  double value = 0.0;
  double c = 0.0;
  double y = 0.0;
};

/// Grid maximum over [0,2] x [0,1], zoomed twice around the best cell and
/// polished coordinatewise by golden section.
PsiMax psi_surface_max(int c_points = 201, int y_points = 101);

struct ChiProfile {
  std::vector<std::pair<double, double>> rows;  // (c, chi(c))
  double argmax = 0.0;
  double max = 0.0;
};

ChiProfile chi_profile(int c_points = 201);

}  // namespace gsh
