#include "gsh/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsh/error.hpp"
#include "gsh/parallel.hpp"

namespace gsh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kCheckTolerance = 1e-9;

cplx unit(double angle) { return std::polar(1.0, angle); }

cplx random_in_disk(Rng& rng, double radius) {
  return std::polar(radius * std::sqrt(uniform(rng)), uniform(rng, 0.0, kTwoPi));
}

TruncatedSeries blaschke_factor(cplx a, int order) {
  TruncatedSeries num = TruncatedSeries::identity(order) - a;
  TruncatedSeries den = TruncatedSeries::constant(1.0, order) -
                        TruncatedSeries::monomial(1, std::conj(a), order);
  return div(num, den);
}

}  // namespace

void HerglotzSample::validate() const {
  if (weights.empty() || weights.size() != nodes.size())
    throw Error(ErrorCode::InvalidArgument, "Herglotz sample needs matching nonempty weights and nodes");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error(ErrorCode::InvalidArgument, "negative Herglotz weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "Herglotz weights must sum to 1");
  for (cplx eta : nodes) {
    if (!(std::abs(eta) <= 1.0 + 1e-12))
      throw Error(ErrorCode::InvalidArgument, "Herglotz node outside the closed disk");
  }
}

void SchwarzSample::validate() const {
  if (!(std::abs(std::abs(rotation) - 1.0) <= 1e-12))
    throw Error(ErrorCode::InvalidArgument, "Schwarz rotation must be unimodular");
  for (cplx a : zeros) {
    if (!(std::abs(a) < 1.0)) throw Error(ErrorCode::InvalidArgument, "Blaschke zero outside the open disk");
  }
}

cplx SchwarzSample::operator()(cplx z) const {
  cplx w = rotation * z;
  for (cplx a : zeros) w *= (z - a) / (1.0 - std::conj(a) * z);
  return w;
}

TruncatedSeries SchwarzSample::series(int order) const {
  TruncatedSeries w = TruncatedSeries::monomial(1, rotation, order);
  for (cplx a : zeros) {
    if (a == cplx{}) {
      w = w.shifted_up();
    } else {
      w = mul(w, blaschke_factor(a, order));
    }
  }
  return w;
}

SchwarzSample SchwarzSample::monomial(int power, cplx rotation) {
  if (power < 1) throw Error(ErrorCode::InvalidArgument, "Schwarz monomial needs power >= 1");
  return SchwarzSample{rotation, std::vector<cplx>(static_cast<size_t>(power - 1), cplx{})};
}

HerglotzSample random_herglotz(Rng& rng, const SamplerOptions& options) {
  HerglotzSample k;
  const double rmax = options.max_node_modulus;
  if (uniform(rng) < options.boundary_bias) {
    // near-extremal: one dominant atom on the boundary circle plus small mass elsewhere
    const int atoms = uniform_int(rng, 1, 2);
    const double spread = uniform(rng) < 0.5 ? 0.0 : 1e-3 * uniform(rng);
    k.nodes.push_back(rmax * unit(uniform(rng, 0.0, kTwoPi)));
    k.weights.push_back(1.0 - spread);
    if (atoms == 2) {
      k.nodes.push_back(rmax * unit(uniform(rng, 0.0, kTwoPi)));
      k.weights.push_back(spread);
    } else {
      k.weights[0] = 1.0;
    }
  } else {
    const int atoms = uniform_int(rng, 1, std::max(1, options.max_atoms));
    double total = 0.0;
    for (int j = 0; j < atoms; ++j) {
      const double w = std::exponential_distribution<double>(1.0)(rng);
      k.weights.push_back(w);
      total += w;
      k.nodes.push_back(uniform(rng) < 0.5 ? rmax * unit(uniform(rng, 0.0, kTwoPi))
                                           : random_in_disk(rng, rmax));
    }
    for (double& w : k.weights) w /= total;
  }
  // renormalize so the weights sum to one to rounding
  double total = 0.0;
  for (double w : k.weights) total += w;
  for (double& w : k.weights) w /= total;
  return k;
}

SchwarzSample random_schwarz(Rng& rng, const SamplerOptions& options) {
  SchwarzSample s;
  s.rotation = unit(uniform(rng, 0.0, kTwoPi));
  const int count = uniform_int(rng, 0, std::max(0, options.max_zeros));
  const bool boundary = uniform(rng) < options.boundary_bias;
  for (int j = 0; j < count; ++j) {
    if (boundary) {
      // zeros near the origin: omega close to rotation * z^(count+1)
      s.zeros.push_back(random_in_disk(rng, 1e-3));
    } else {
      s.zeros.push_back(random_in_disk(rng, options.max_zero_modulus));
    }
  }
  return s;
}

std::vector<cplx> caratheodory_coeffs(const HerglotzSample& k, int upto) {
  if (upto < 1) throw Error(ErrorCode::InvalidArgument, "caratheodory_coeffs needs upto >= 1");
  std::vector<cplx> c(static_cast<size_t>(upto) + 1);
  c[0] = 1.0;
  for (size_t j = 0; j < k.nodes.size(); ++j) {
    cplx power = 1.0;
    for (int n = 1; n <= upto; ++n) {
      power *= k.nodes[j];
      c[static_cast<size_t>(n)] += 2.0 * k.weights[j] * power;
    }
  }
  return c;
}

TruncatedSeries herglotz_series(const HerglotzSample& k, int order) {
  TruncatedSeries sum(order);
  const auto one = TruncatedSeries::constant(1.0, order);
  for (size_t j = 0; j < k.nodes.size(); ++j) {
    const auto ez = TruncatedSeries::monomial(1, k.nodes[j], order);
    sum += div(one + ez, one - ez) * k.weights[j];
  }
  return sum;
}

TruncatedSeries from_schwarz(const TruncatedSeries& omega) {
  if (omega[0] != cplx{}) throw Error(ErrorCode::NonzeroInnerConstant, "Schwarz series must vanish at 0");
  const auto one = TruncatedSeries::constant(1.0, omega.order());
  return div(one + omega, one - omega);
}

TruncatedSeries from_schwarz(const SchwarzSample& omega, int order) { return from_schwarz(omega.series(order)); }

TruncatedSeries schwarz_from_caratheodory(const TruncatedSeries& k) {
  auto w = div(k - 1.0, k + 1.0);
  // k_0 == 1 makes the constant term vanish up to rounding; pin it.
  std::vector<cplx> c(w.coeffs().begin(), w.coeffs().end());
  c[0] = 0.0;
  return TruncatedSeries(std::move(c));
}

std::vector<cplx> rotate_to_real_c1(std::span<const cplx> c) {
  std::vector<cplx> out(c.begin(), c.end());
  if (out.size() < 2 || std::abs(out[1]) == 0.0) return out;
  const double phase = std::arg(out[1]);
  for (size_t n = 1; n < out.size(); ++n) out[n] *= unit(-static_cast<double>(n) * phase);
  out[1] = std::abs(c[1]);
  return out;
}

LcWitnesses lemma_lc_witnesses(cplx c1, cplx c2, cplx c3, const LcTolerances& tol) {
  LcWitnesses out;
  const cplx t = 4.0 - c1 * c1;
  if (std::abs(std::abs(c1) - 2.0) <= tol.c1 || std::abs(t) <= tol.conditioning) return out;
  const cplx x = (2.0 * c2 - c1 * c1) / t;
  out.x = x;
  out.x_valid = std::abs(x) <= 1.0 + 1e-9;
  const double gap = 1.0 - std::norm(x);
  if (gap <= tol.z_solve || std::abs(t) * gap <= tol.conditioning) return out;
  const cplx z = (4.0 * c3 - c1 * c1 * c1 - 2.0 * t * c1 * x + t * c1 * x * x) / (2.0 * t * gap);
  out.z = z;
  out.z_valid = std::abs(z) <= 1.0 + 1e-9;
  return out;
}

double fekete_szego_p_bound(double nu) {
  if (nu <= 0.0) return -4.0 * nu + 2.0;
  if (nu <= 1.0) return 2.0;
  return 4.0 * nu - 2.0;
}

double fekete_szego_p_bound(cplx lambda) { return 2.0 * std::max(1.0, std::abs(2.0 * lambda - 1.0)); }

double lj_bound(cplx a, cplx b, cplx d) {
  return 2.0 * std::abs(a) + 2.0 * std::abs(b - 2.0 * a) + 2.0 * std::abs(a - b + d);
}

bool la_condition(double l, double r, double m, double n) {
  if (!(m > 0.0 && m < 1.0 && r > 0.0 && r < 1.0)) return false;
  const double p = m * n - 2.0 * l;
  const double q = m * (r + m) - n;
  const double s = n - 2.0 * r * m;
  const double lhs = 8.0 * r * (1.0 - r) * (p * p + q * q) + m * (1.0 - m) * s * s;
  const double rhs = 4.0 * m * m * (1.0 - m) * (1.0 - m) * r * (1.0 - r);
  return lhs <= rhs;
}

cplx la_functional(double l, double r, double m, double n, std::span<const cplx> c) {
  if (c.size() < 5) throw Error(ErrorCode::InvalidArgument, "la_functional needs c_0..c_4");
  return l * std::pow(c[1], 4) + r * c[2] * c[2] + 2.0 * m * c[1] * c[3] - 1.5 * n * c[1] * c[1] * c[2] - c[4];
}

namespace {

struct SampleOutcome {
  LemmaSuiteReport counts;  // single-sample tallies
  std::optional<LemmaViolation> violation;
};

void note(SampleOutcome& out, std::size_t index, const HerglotzSample& k, const char* check, double value,
          double bound) {
  if (!out.violation) out.violation = LemmaViolation{index, check, k, value, bound};
}

// la parameters clustered around the feasible set (r ~ m, n ~ m(r+m), l ~ mn/2).
void draw_la_params(Rng& rng, std::size_t index, double& l, double& r, double& m, double& n) {
  if (index % 8 == 0) {
    l = 5.0 / 144.0, r = 0.25, m = 1.0 / 6.0, n = 5.0 / 36.0;
    return;
  }
  m = uniform(rng, 0.02, 0.98);
  r = std::clamp(m * (1.0 + 0.2 * (uniform(rng) - 0.5)), 0.01, 0.99);
  n = m * (r + m) * (1.0 + 0.1 * (uniform(rng) - 0.5));
  l = m * n / 2.0 + 0.02 * m * (uniform(rng) - 0.5);
}

SampleOutcome run_lemmas(const HerglotzSample& k, std::size_t index, std::uint64_t seed) {
  SampleOutcome out;
  auto& t = out.counts;
  Rng rng = sample_rng(seed, index);
  const auto c = caratheodory_coeffs(k, 8);

  for (int n = 1; n <= 8; ++n) {
    const double v = std::abs(c[static_cast<size_t>(n)]);
    t.max_cn = std::max(t.max_cn, v);
    if (v > 2.0 + kCheckTolerance) {
      ++t.cn_violations;
      note(out, index, k, "cn", v, 2.0);
    }
  }

  const cplx lambda{uniform(rng, -2.0, 3.0), uniform(rng, -2.0, 2.0)};
  const double fs = std::abs(c[2] - lambda * c[1] * c[1]);
  if (fs > fekete_szego_p_bound(lambda) + kCheckTolerance) {
    ++t.fs_complex_violations;
    note(out, index, k, "fekete_szego_complex", fs, fekete_szego_p_bound(lambda));
  }

  const double nu = uniform(rng, -2.0, 3.0);
  const double fsr = std::abs(c[2] - nu * c[1] * c[1]);
  if (fsr > fekete_szego_p_bound(nu) + kCheckTolerance) {
    ++t.fs_real_violations;
    note(out, index, k, "fekete_szego_real", fsr, fekete_szego_p_bound(nu));
  }

  const cplx a = random_in_disk(rng, 1.0), b = random_in_disk(rng, 1.0), d = random_in_disk(rng, 1.0);
  const double lj = std::abs(a * c[1] * c[1] * c[1] - b * c[1] * c[2] + d * c[3]);
  const double ljb = lj_bound(a, b, d);
  if (ljb > 0.0) t.max_lj_ratio = std::max(t.max_lj_ratio, lj / ljb);
  if (lj > ljb + kCheckTolerance) {
    ++t.lj_violations;
    note(out, index, k, "lj", lj, ljb);
  }

  double l = 0, r = 0, m = 0, n = 0;
  draw_la_params(rng, index, l, r, m, n);
  if (la_condition(l, r, m, n)) {
    ++t.la_condition_hits;
    const double v = std::abs(la_functional(l, r, m, n, c));
    t.max_la_value = std::max(t.max_la_value, v);
    if (v > 2.0 + kCheckTolerance) {
      ++t.la_violations;
      note(out, index, k, "la", v, 2.0);
    }
  }

  const auto rc = rotate_to_real_c1(c);
  const LcTolerances tol{1e-9, 1e-12, 1e-4};
  const auto w = lemma_lc_witnesses(rc[1], rc[2], rc[3], tol);
  if (w.x) t.max_witness_modulus = std::max(t.max_witness_modulus, std::abs(*w.x));
  if (w.z) t.max_witness_modulus = std::max(t.max_witness_modulus, std::abs(*w.z));
  if (w.degenerate()) ++t.lc_degenerate;
  const bool bad = (w.x && !w.x_valid) || (w.z && !w.z_valid);
  if (bad) {
    ++t.lc_invalid;
    note(out, index, k, "lc_witness", t.max_witness_modulus, 1.0);
  }
  return out;
}

}  // namespace

LemmaSuiteReport empirical_lemma_suite(std::span<const HerglotzSample> samples, std::uint64_t seed) {
  std::vector<SampleOutcome> outcomes(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) { outcomes[i] = run_lemmas(samples[i], i, seed); });

  LemmaSuiteReport report;
  report.samples = samples.size();
  for (const auto& o : outcomes) {
    const auto& t = o.counts;
    report.cn_violations += t.cn_violations;
    report.fs_complex_violations += t.fs_complex_violations;
    report.fs_real_violations += t.fs_real_violations;
    report.lj_violations += t.lj_violations;
    report.la_violations += t.la_violations;
    report.la_condition_hits += t.la_condition_hits;
    report.lc_invalid += t.lc_invalid;
    report.lc_degenerate += t.lc_degenerate;
    report.max_cn = std::max(report.max_cn, t.max_cn);
    report.max_lj_ratio = std::max(report.max_lj_ratio, t.max_lj_ratio);
    report.max_la_value = std::max(report.max_la_value, t.max_la_value);
    report.max_witness_modulus = std::max(report.max_witness_modulus, t.max_witness_modulus);
    if (!report.first_violation && o.violation) report.first_violation = o.violation;
  }
  return report;
}

LemmaSuiteReport empirical_lemma_suite(std::size_t samples, std::uint64_t seed, const SamplerOptions& options) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "lemma suite needs at least one sample");
  std::vector<HerglotzSample> members(samples);
  // sample draws use a stream disjoint from the per-sample parameter streams
  parallel_for(samples, [&](std::size_t i) {
    Rng rng = sample_rng(seed ^ 0x9e3779b97f4a7c15ull, i);
    members[i] = random_herglotz(rng, options);
  });
  return empirical_lemma_suite(members, seed);
}

}  // namespace gsh
