#include "gsh/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gsh/error.hpp"
#include "gsh/optimize.hpp"
#include "gsh/parallel.hpp"

namespace gsh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Best {
  double value = -1.0;
  Witness witness = SchwarzSample{};
};

void offer(Best& best, double value, const Witness& w) {
  if (value > best.value) best = {value, w};
}

// Schwarz witness <-> flat parameter vector (rotation angle, then |a_j|, arg a_j).
std::vector<double> flatten(const SchwarzSample& s) {
  std::vector<double> p{std::arg(s.rotation)};
  for (cplx a : s.zeros) {
    p.push_back(std::abs(a));
    p.push_back(std::arg(a));
  }
  return p;
}

SchwarzSample unflatten(const std::vector<double>& p) {
  SchwarzSample s;
  s.rotation = std::polar(1.0, p[0]);
  for (size_t j = 1; j + 1 < p.size(); j += 2) s.zeros.push_back(std::polar(p[j], p[j + 1]));
  return s;
}

SchwarzSample polish(const Functional& functional, SchwarzSample start, int order) {
  auto params = flatten(start);
  auto objective = [&](const std::vector<double>& p) {
    return evaluate_witness(functional, unflatten(p), order);
  };
  double current = objective(params);
  for (int sweep = 0; sweep < 3; ++sweep) {
    for (size_t i = 0; i < params.size(); ++i) {
      double lo, hi;
      const bool modulus = i > 0 && (i % 2) == 1;
      if (modulus) {
        lo = std::max(0.0, params[i] - 0.15);
        hi = std::min(0.999, params[i] + 0.15);
      } else {
        lo = params[i] - 0.25;
        hi = params[i] + 0.25;
      }
      auto trial = params;
      const auto r = golden_section_maximize(
          [&](double v) {
            trial[i] = v;
            return objective(trial);
          },
          lo, hi, 1e-10);
      if (r.value > current) {
        current = r.value;
        params[i] = r.x;
      }
    }
  }
  return unflatten(params);
}

std::vector<cplx> lc_coefficients(const LcPoint& p) {
  const cplx c1 = p.c;
  const cplx t = 4.0 - c1 * c1;
  const cplx c2 = (c1 * c1 + p.x * t) / 2.0;
  const cplx c3 = (c1 * c1 * c1 + 2.0 * t * c1 * p.x - t * c1 * p.x * p.x +
                   2.0 * t * (1.0 - std::norm(p.x)) * p.z) /
                  4.0;
  const std::array<cplx, 4> c{c1, c2, c3, 0.0};
  const auto a = coeffs_from_caratheodory(c);
  return {0.0, 1.0, a[0], a[1], a[2]};
}

}  // namespace

void ScanConfig::validate() const {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "scan needs at least one sample");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "scan tolerance must be positive");
}

const char* family_name(const Witness& w) noexcept {
  switch (w.index()) {
    case 0: return "schwarz";
    case 1: return "herglotz";
    default: return "lc_point";
  }
}

std::string Functional::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Coefficient: os << "a" << n; break;
    case Kind::FeketeSzego: os << "FS(" << lambda.real() << (lambda.imag() < 0 ? "-" : "+") << std::abs(lambda.imag()) << "i)"; break;
    case Kind::T: os << "a4-a2a3"; break;
    case Kind::H22: os << "H22"; break;
    case Kind::H31: os << "H31"; break;
  }
  return os.str();
}

double Functional::claimed_bound() const {
  switch (kind) {
    case Kind::Coefficient: return 1.0 / (n - 1);
    case Kind::FeketeSzego: return 0.5 * std::max(1.0, std::abs(2.0 * lambda - 1.0));
    case Kind::T: return 1.0 / 3.0;
    case Kind::H22: return 1.0 / 36.0;
    case Kind::H31: return 0.25;
  }
  return 0.0;
}

int Functional::needed_order() const {
  switch (kind) {
    case Kind::Coefficient: return n;
    case Kind::FeketeSzego: return 3;
    case Kind::T:
    case Kind::H22: return 4;
    case Kind::H31: return 5;
  }
  return 5;
}

bool Functional::depends_on_c3_only() const { return needed_order() <= 4; }

double Functional::value(std::span<const cplx> a) const {
  if (static_cast<int>(a.size()) <= needed_order())
    throw Error(ErrorCode::InvalidArgument, "not enough coefficients for " + name());
  switch (kind) {
    case Kind::Coefficient: return std::abs(a[static_cast<size_t>(n)]);
    case Kind::FeketeSzego: return std::abs(a[3] - lambda * a[2] * a[2]);
    case Kind::T: return std::abs(a[4] - a[2] * a[3]);
    case Kind::H22: return std::abs(a[2] * a[4] - a[3] * a[3]);
    case Kind::H31: {
      const std::array<cplx, 4> tail{a[2], a[3], a[4], a[5]};
      return std::abs(hankel_report(tail).h31);
    }
  }
  return 0.0;
}

std::vector<cplx> witness_coefficients(const Witness& w, int order) {
  if (const auto* s = std::get_if<SchwarzSample>(&w)) {
    const auto f = member_from_witness(*s, order);
    return {f.series().coeffs().begin(), f.series().coeffs().end()};
  }
  if (const auto* k = std::get_if<HerglotzSample>(&w)) {
    const auto f = member_from_caratheodory(*k, order);
    return {f.series().coeffs().begin(), f.series().coeffs().end()};
  }
  return lc_coefficients(std::get<LcPoint>(w));
}

double evaluate_witness(const Functional& functional, const Witness& w, int order) {
  return functional.value(witness_coefficients(w, order));
}

BoundEstimate scan(const Functional& functional, const ScanConfig& cfg) {
  cfg.validate();
  const int order = std::max(cfg.order, functional.needed_order());
  Best best;
  std::size_t evaluated = 0;

  // boundary family: omega = e^{i phi} z^k
  for (int k = 1; k <= functional.needed_order(); ++k) {
    for (int j = 0; j < 8; ++j) {
      const Witness w = SchwarzSample::monomial(k, std::polar(1.0, kTwoPi * j / 8));
      offer(best, evaluate_witness(functional, w, order), w);
      ++evaluated;
    }
  }

  // random Schwarz witnesses and random Caratheodory (Herglotz) witnesses
  std::vector<double> schwarz_values(cfg.samples), herglotz_values(cfg.samples);
  std::vector<SchwarzSample> schwarz(cfg.samples);
  std::vector<HerglotzSample> herglotz(cfg.samples);
  parallel_for(cfg.samples, [&](std::size_t i) {
    Rng rng = sample_rng(cfg.seed, i);
    schwarz[i] = random_schwarz(rng, cfg.sampler);
    herglotz[i] = random_herglotz(rng, cfg.sampler);
    schwarz_values[i] = evaluate_witness(functional, schwarz[i], order);
    herglotz_values[i] = evaluate_witness(functional, herglotz[i], order);
  });
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    offer(best, schwarz_values[i], schwarz[i]);
    offer(best, herglotz_values[i], herglotz[i]);
  }
  evaluated += 2 * cfg.samples;

  if (functional.depends_on_c3_only()) {
    for (int ic = 0; ic < cfg.c_points; ++ic) {
      const double c = cfg.c_points == 1 ? 0.0 : 2.0 * ic / (cfg.c_points - 1);
      for (int ir = 0; ir <= cfg.x_radii; ++ir) {
        const double xr = static_cast<double>(ir) / std::max(1, cfg.x_radii);
        for (int ia = 0; ia < (ir == 0 ? 1 : cfg.x_angles); ++ia) {
          const cplx x = std::polar(xr, kTwoPi * ia / cfg.x_angles);
          for (int iz = 0; iz < cfg.z_angles; ++iz) {
            const Witness w = LcPoint{c, x, std::polar(1.0, kTwoPi * iz / cfg.z_angles)};
            offer(best, evaluate_witness(functional, w, order), w);
            ++evaluated;
          }
        }
      }
    }
  }

  if (cfg.polish) {
    // polish the best Schwarz witness seen (boundary or random)
    Best schwarz_best;
    for (int k = 1; k <= functional.needed_order(); ++k) {
      const Witness w = SchwarzSample::monomial(k);
      offer(schwarz_best, evaluate_witness(functional, w, order), w);
    }
    for (std::size_t i = 0; i < cfg.samples; ++i) offer(schwarz_best, schwarz_values[i], schwarz[i]);
    const auto polished = polish(functional, std::get<SchwarzSample>(schwarz_best.witness), order);
    offer(best, evaluate_witness(functional, polished, order), polished);
  }

  BoundEstimate out;
  out.functional = functional.name();
  out.empirical_max = best.value;
  out.witness = best.witness;
  out.order = order;
  out.claimed_bound = functional.claimed_bound();
  out.attained_ratio = out.empirical_max / out.claimed_bound;
  out.tolerance = cfg.tolerance;
  out.violation = out.empirical_max > out.claimed_bound + cfg.tolerance;
  out.evaluated = evaluated;
  return out;
}

BoundEstimate scan_coefficient_bound(int n, const ScanConfig& cfg) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "coefficient scan needs n >= 2");
  return scan(Functional::coefficient(n), cfg);
}

BoundEstimate hankel_scan(HankelKind kind, const ScanConfig& cfg, cplx lambda) {
  switch (kind) {
    case HankelKind::H22: return scan(Functional::h22(), cfg);
    case HankelKind::H31: return scan(Functional::h31(), cfg);
    case HankelKind::FS: return scan(Functional::fekete_szego(lambda), cfg);
    case HankelKind::T: return scan(Functional::t(), cfg);
  }
  return scan(Functional::h22(), cfg);
}

double psi_surface(double c, double y) {
  const double t = 4.0 - c * c;
  return (0.5 * std::pow(c, 4) + 6.0 * c * c * y * t + 6.0 * c * c * y * y * t + 12.0 * c * t * (1.0 - y * y) +
          4.5 * y * y * t * t) /
         288.0;
}

double chi(double c) { return psi_surface(c, 1.0); }

PsiMax psi_surface_max(int c_points, int y_points) {
  if (c_points < 2 || y_points < 2) throw Error(ErrorCode::InvalidArgument, "psi grid needs >= 2 points per axis");
  double c_lo = 0.0, c_hi = 2.0, y_lo = 0.0, y_hi = 1.0;
  PsiMax best{-1.0, 0.0, 0.0};
  for (int level = 0; level < 3; ++level) {
    const double dc = (c_hi - c_lo) / (c_points - 1);
    const double dy = (y_hi - y_lo) / (y_points - 1);
    for (int i = 0; i < c_points; ++i) {
      for (int j = 0; j < y_points; ++j) {
        const double c = c_lo + dc * i, y = y_lo + dy * j;
        const double v = psi_surface(c, y);
        if (v > best.value) best = {v, c, y};
      }
    }
    c_lo = std::max(0.0, best.c - dc), c_hi = std::min(2.0, best.c + dc);
    y_lo = std::max(0.0, best.y - dy), y_hi = std::min(1.0, best.y + dy);
  }
  for (int sweep = 0; sweep < 4; ++sweep) {
    const auto rc = golden_section_maximize([&](double c) { return psi_surface(c, best.y); }, c_lo, c_hi, 1e-12);
    if (rc.value >= best.value) best.value = rc.value, best.c = rc.x;
    const auto ry = golden_section_maximize([&](double y) { return psi_surface(best.c, y); }, y_lo, y_hi, 1e-12);
    if (ry.value >= best.value) best.value = ry.value, best.y = ry.x;
  }
  return best;
}

ChiProfile chi_profile(int c_points) {
  if (c_points < 2) throw Error(ErrorCode::InvalidArgument, "chi profile needs >= 2 points");
  ChiProfile p;
  p.max = -1.0;
  for (int i = 0; i < c_points; ++i) {
    const double c = 2.0 * i / (c_points - 1);
    const double v = chi(c);
    p.rows.emplace_back(c, v);
    if (v > p.max) p.max = v, p.argmax = c;
  }
  return p;
}

}  // namespace gsh
