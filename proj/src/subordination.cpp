#include "gsh/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gsh/caratheodory.hpp"
#include "gsh/error.hpp"
#include "gsh/optimize.hpp"
#include "gsh/parallel.hpp"

namespace gsh {

namespace {

constexpr double kPi = std::numbers::pi;

const double kSin1 = std::sin(1.0);
const double kCos1 = std::cos(1.0);
const double kSinh1 = std::sinh(1.0);
const double kCosh1 = std::cosh(1.0);

// Region boundaries with a certified inner disk: both maps are univalent on
// the disk and send 0 to 0, so the disk of radius dist(0, boundary) is inside.
ClosedCurve with_inner_disk(const std::function<cplx(double)>& gamma, int points) {
  ClosedCurve probe(gamma, points);
  double nearest = std::numeric_limits<double>::infinity();
  for (cplx v : probe.vertices()) nearest = std::min(nearest, std::abs(v));
  return ClosedCurve(gamma, points, nearest * (1.0 - 1e-4));
}

const ClosedCurve& sinh_region() {
  static const ClosedCurve curve = ClosedCurve::sinh_boundary(4096);
  return curve;
}

const ClosedCurve& sqrt_region() {
  static const ClosedCurve curve = with_inner_disk(
      [](double t) { return std::sqrt(1.0 + std::polar(1.0, t - kPi)) - 1.0; }, 4096);
  return curve;
}

bool strictly_inside(const ClosedCurve& curve, cplx v) {
  const double r = std::abs(v);
  if (r < curve.inner_radius()) return true;
  if (r > curve.outer_radius()) return false;
  if (curve.winding_number(v) == 0) return false;
  return curve.distance(v) >= kBoundaryAmbiguity;
}

// Grid values shared by all scalings f_t = z + t (f - z).
struct GridValues {
  std::vector<cplx> z, f_over_z, fprime;
};

GridValues sample_grid(const NormalizedFunction& f, const PolarGrid& grid) {
  GridValues v;
  const auto g = f.series().shifted_down();
  const auto fp = derivative(f.series());
  grid.for_each([&](cplx z) {
    v.z.push_back(z);
    v.f_over_z.push_back(evaluate(g, z));
    v.fprime.push_back(evaluate(fp, z));
  });
  return v;
}

cplx operator_value(OperatorKind kind, cplx alpha, cplx z, cplx f_over_z, cplx fprime) {
  switch (kind) {
    case OperatorKind::P1: return 1.0 + alpha * z * fprime;
    case OperatorKind::P2: return 1.0 + alpha * fprime / f_over_z;
    case OperatorKind::P3: return 1.0 + alpha * fprime / (f_over_z * f_over_z);
    case OperatorKind::P4: return 1.0 + alpha * fprime / (f_over_z * f_over_z * f_over_z);
  }
  return 1.0;
}

ImplicationRecord check_scaled(const GridValues& v, double t, const ImplicationCase& c) {
  ImplicationRecord rec;
  rec.kind = c.kind;
  rec.janowski = c.janowski;
  rec.alpha = c.alpha;
  rec.scale = t;

  std::vector<cplx> values;
  values.reserve(v.z.size() + 1);
  double min_ratio = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.z.size(); ++i) {
    const cplx foz = 1.0 + t * (v.f_over_z[i] - 1.0);
    const cplx fp = 1.0 + t * (v.fprime[i] - 1.0);
    min_ratio = std::min(min_ratio, std::abs(foz));
    values.push_back(operator_value(c.kind, c.alpha, v.z[i], foz, fp));
  }
  values.push_back(operator_value(c.kind, c.alpha, 0.0, 1.0, 1.0));  // the centre z = 0
  if (c.kind != OperatorKind::P1 && min_ratio <= 1e-8)
    throw Error(ErrorCode::ZeroDivisorOnGrid, "f(z)/z vanishes on the grid");

  rec.deviation = janowski_deviation(values, c.janowski);
  rec.premise_holds = rec.deviation < 1.0 - kPremiseMargin;
  rec.vacuous = !rec.premise_holds;

  rec.conclusion_holds = true;
  rec.conclusion_sqrt_holds = true;
  for (size_t i = 0; i < v.z.size(); ++i) {
    const cplx u = t * (v.f_over_z[i] - 1.0);
    if (rec.conclusion_holds && !strictly_inside(sinh_region(), u)) rec.conclusion_holds = false;
    if (rec.conclusion_sqrt_holds && !strictly_inside(sqrt_region(), u)) rec.conclusion_sqrt_holds = false;
    if (!rec.conclusion_holds && !rec.conclusion_sqrt_holds) break;
  }
  return rec;
}

}  // namespace

void JanowskiParams::validate() const {
  if (!(-1.0 <= B && B < A && A <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "Janowski parameters need -1 <= B < A <= 1");
}

const char* to_string(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::P1: return "P1";
    case OperatorKind::P2: return "P2";
    case OperatorKind::P3: return "P3";
    case OperatorKind::P4: return "P4";
  }
  return "P?";
}

double cosh_modulus_sq(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double ch = std::cosh(c), sh = std::sinh(c);
  return ch * ch * std::cos(s) * std::cos(s) + sh * sh * std::sin(s) * std::sin(s);
}

double sinh_modulus_sq(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double ch = std::cosh(c), sh = std::sinh(c);
  return sh * sh * std::cos(s) * std::cos(s) + ch * ch * std::sin(s) * std::sin(s);
}

TrigExtrema trig_extrema(int theta_samples) {
  if (theta_samples < 1024) throw Error(ErrorCode::InvalidArgument, "trig_extrema needs >= 1024 samples");
  const double h = 2.0 * kPi / theta_samples;
  auto cosh_abs = [](double t) { return std::sqrt(cosh_modulus_sq(t)); };
  auto sinh_abs = [](double t) { return std::sqrt(sinh_modulus_sq(t)); };

  TrigExtrema e;
  e.cosh_min = e.sinh_min = std::numeric_limits<double>::infinity();
  e.cosh_max = e.sinh_max = -1.0;
  for (int k = 0; k <= theta_samples; ++k) {
    const double t = -kPi + h * k;
    const double c = cosh_abs(t), s = sinh_abs(t);
    if (c < e.cosh_min) e.cosh_min = c, e.cosh_min_theta = t;
    if (c > e.cosh_max) e.cosh_max = c, e.cosh_max_theta = t;
    if (s < e.sinh_min) e.sinh_min = s, e.sinh_min_theta = t;
    if (s > e.sinh_max) e.sinh_max = s, e.sinh_max_theta = t;
    e.max_asymmetry = std::max({e.max_asymmetry, std::abs(cosh_modulus_sq(t) - cosh_modulus_sq(-t)),
                                std::abs(sinh_modulus_sq(t) - sinh_modulus_sq(-t))});
  }

  auto refine_min = [&](const std::function<double(double)>& fn, double& value, double& theta) {
    const auto r = golden_section_minimize(fn, theta - h, theta + h, 1e-12);
    if (r.value <= value) value = r.value, theta = r.x;
  };
  auto refine_max = [&](const std::function<double(double)>& fn, double& value, double& theta) {
    const auto r = golden_section_maximize(fn, theta - h, theta + h, 1e-12);
    if (r.value >= value) value = r.value, theta = r.x;
  };
  refine_min(cosh_abs, e.cosh_min, e.cosh_min_theta);
  refine_max(cosh_abs, e.cosh_max, e.cosh_max_theta);
  refine_min(sinh_abs, e.sinh_min, e.sinh_min_theta);
  refine_max(sinh_abs, e.sinh_max, e.sinh_max_theta);
  return e;
}

std::optional<double> alpha_threshold(OperatorKind kind, const JanowskiParams& params) {
  params.validate();
  const double base = 1.0 + kCos1 - kSin1;
  const double spread = 1.0 + kSinh1 + kCosh1;
  const double a_minus_b = params.A - params.B;
  double numerator = a_minus_b;
  double denominator = base - params.B * spread;
  switch (kind) {
    case OperatorKind::P1: denominator = base - std::abs(params.B) * spread; break;
    case OperatorKind::P2: numerator *= 1.0 + kSinh1; break;
    case OperatorKind::P3: numerator *= std::pow(1.0 + kSinh1, 2); break;
    case OperatorKind::P4: numerator *= std::pow(1.0 + kSinh1, 3); break;
  }
  if (!(denominator > 0.0)) return std::nullopt;
  return numerator / denominator;
}

double janowski_deviation(std::span<const cplx> values, const JanowskiParams& params) {
  double sup = 0.0;
  for (cplx v : values) {
    const cplx den = params.A - params.B * v;
    if (den == cplx{}) return std::numeric_limits<double>::infinity();
    sup = std::max(sup, std::abs((v - 1.0) / den));
  }
  return sup;
}

ImplicationRecord verify_implication(const NormalizedFunction& f, const ImplicationCase& c, const PolarGrid& grid) {
  grid.validate();
  c.janowski.validate();
  if (std::abs(c.alpha) == 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonzero");
  return check_scaled(sample_grid(f, grid), 1.0, c);
}

CorollaryResult corollary_operator(const NormalizedFunction& g, OperatorKind kind, cplx alpha) {
  const auto& s = g.series();
  const auto gp = derivative(s);
  const auto gpp = derivative(gp);
  const auto ratio = ratio_series(g);                      // z g'/g
  const auto l = ratio.shifted_up();                       // z^2 g'/g
  const auto bracket = (div(gpp.shifted_up(), gp) - ratio) + 2.0;  // 2 + z g''/g' - z g'/g
  const auto zlprime = derivative(l).shifted_up();

  CorollaryResult out{TruncatedSeries(0), TruncatedSeries(0), 0.0, 0.0};
  out.identity_residual = max_abs_diff(zlprime, mul(l, bracket));

  const NormalizedFunction lf(l.truncated(l.order()));
  const auto l_over_z = l.shifted_down();
  const auto lp = derivative(l);
  switch (kind) {
    case OperatorKind::P1:
      out.op = mul(l, bracket) * alpha + 1.0;
      out.reduced = zlprime * alpha + 1.0;
      break;
    case OperatorKind::P2:
      out.op = bracket * alpha + 1.0;
      out.reduced = div(lp, l_over_z) * alpha + 1.0;
      break;
    case OperatorKind::P3:
      out.op = div(bracket, ratio) * alpha + 1.0;
      out.reduced = div(lp, mul(l_over_z, l_over_z)) * alpha + 1.0;
      break;
    case OperatorKind::P4:
      out.op = div(bracket, mul(ratio, ratio)) * alpha + 1.0;
      out.reduced = div(lp, mul(l_over_z, mul(l_over_z, l_over_z))) * alpha + 1.0;
      break;
  }
  out.reduction_residual = max_abs_diff(out.op, out.reduced);
  return out;
}

std::size_t HarnessReport::counterexamples() const {
  std::size_t n = 0;
  for (const auto& s : summaries) n += s.counterexamples;
  return n;
}

HarnessReport run_implication_harness(const HarnessConfig& cfg) {
  cfg.grid.validate();
  // sample functions: even index -> small-coefficient polynomial, odd -> witness-built member
  std::vector<NormalizedFunction> functions(cfg.functions, NormalizedFunction::identity(cfg.order));
  parallel_for(cfg.functions, [&](std::size_t i) {
    Rng rng = sample_rng(cfg.seed, i);
    if (i % 2 == 0) {
      const int degree = uniform_int(rng, 2, 6);
      const double scale = uniform(rng, 0.0, 0.5);
      std::vector<cplx> tail;
      for (int n = 2; n <= degree; ++n)
        tail.push_back(std::polar(scale * std::sqrt(uniform(rng)) / n, uniform(rng, 0.0, 2.0 * kPi)));
      functions[i] = NormalizedFunction::from_tail(tail, cfg.order);
    } else {
      SamplerOptions opts;
      opts.max_zero_modulus = 0.6;
      functions[i] = member_from_witness(random_schwarz(rng, opts), cfg.order);
    }
  });
  std::vector<GridValues> grids(cfg.functions);
  parallel_for(cfg.functions, [&](std::size_t i) { grids[i] = sample_grid(functions[i], cfg.grid); });

  HarnessReport report;
  for (const auto& jp : cfg.janowski) {
    for (OperatorKind kind : {OperatorKind::P1, OperatorKind::P2, OperatorKind::P3, OperatorKind::P4}) {
      HarnessSummary summary;
      summary.kind = kind;
      summary.janowski = jp;
      summary.threshold = alpha_threshold(kind, jp);
      summary.b_sign_flag = jp.B < 0.0;
      if (!summary.threshold) {
        report.summaries.push_back(summary);
        continue;
      }
      summary.alpha = cfg.alpha_factor * *summary.threshold;
      const ImplicationCase c{kind, summary.alpha, jp};

      std::vector<ImplicationRecord> records(cfg.functions);
      parallel_for(cfg.functions, [&](std::size_t i) {
        double t = 1.0;
        ImplicationRecord last;
        bool have = false;
        for (int h = 0; h <= cfg.max_halvings; ++h, t *= 0.5) {
          try {
            last = check_scaled(grids[i], t, c);
            have = true;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::ZeroDivisorOnGrid) throw;
            continue;
          }
          if (last.premise_holds) break;
        }
        if (!have) {
          last = ImplicationRecord{};
          last.kind = kind, last.janowski = jp, last.alpha = summary.alpha, last.scale = 0.0;
          last.deviation = std::numeric_limits<double>::infinity();
        }
        records[i] = last;
      });
      for (std::size_t i = 0; i < cfg.functions; ++i) {
        const auto& r = records[i];
        ++summary.cases;
        if (r.premise_holds) {
          ++summary.non_vacuous;
          if (!r.conclusion_holds) ++summary.counterexamples;
          if (!r.conclusion_sqrt_holds) ++summary.sqrt_counterexamples;
        }
        report.records.push_back(r);
        const auto scaled = scale_toward_identity(functions[i], r.scale);
        report.functions.emplace_back(scaled.series().coeffs().begin(), scaled.series().coeffs().end());
      }
      report.summaries.push_back(summary);
    }
  }
  return report;
}

}  // namespace gsh
