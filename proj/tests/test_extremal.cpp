#include <doctest.h>

#include "gsh/error.hpp"
#include "gsh/extremal.hpp"
#include "oracles.hpp"

using namespace gsh;
using oracle::rational;

namespace {

// The displayed surface, in exact arithmetic.
rational psi_exact(const rational& c, const rational& y) {
  const rational t = 4 - c * c;
  return (c * c * c * c / 2 + 6 * c * c * y * t + 6 * c * c * y * y * t + 12 * c * t * (1 - y * y) +
          rational(9, 2) * y * y * t * t) /
         288;
}

ScanConfig small_scan() {
  ScanConfig cfg;
  cfg.samples = 1500;
  cfg.seed = 4;
  return cfg;
}

}  // namespace

TEST_CASE("functional metadata") {
  CHECK(Functional::coefficient(4).claimed_bound() == doctest::Approx(1.0 / 3.0));
  CHECK(Functional::fekete_szego(2.0).claimed_bound() == doctest::Approx(1.5));
  CHECK(Functional::fekete_szego(cplx(0.0, 1.0)).claimed_bound() == doctest::Approx(0.5 * std::sqrt(5.0)));
  CHECK(Functional::t().claimed_bound() == doctest::Approx(1.0 / 3.0));
  CHECK(Functional::h22().claimed_bound() == doctest::Approx(1.0 / 36.0));
  CHECK(Functional::h31().claimed_bound() == doctest::Approx(0.25));
  CHECK(Functional::h31().needed_order() == 5);
  CHECK(Functional::h22().depends_on_c3_only());
  CHECK_FALSE(Functional::h31().depends_on_c3_only());
  const std::vector<cplx> a{0.0, 1.0, 1.0, 0.5};
  CHECK(Functional::fekete_szego(1.0).value(a) == doctest::Approx(0.5));
  CHECK_THROWS_AS(Functional::h22().value(a), Error);
}

TEST_CASE("witness coefficients") {
  const auto a = witness_coefficients(Witness{SchwarzSample::monomial(1)}, 6);
  CHECK(a[4].real() == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  // c = 2, |x| = 1 gives c_1 = c_2 = c_3 = 2, the data of f0 up to a_4
  const auto lc = witness_coefficients(Witness{LcPoint{2.0, 1.0, 0.0}}, 4);
  CHECK(lc[2].real() == doctest::Approx(1.0));
  CHECK(lc[3].real() == doctest::Approx(0.5));
  CHECK(lc[4].real() == doctest::Approx(2.0 / 9.0));
  CHECK(evaluate_witness(Functional::h22(), Witness{SchwarzSample::monomial(2)}, 6) == doctest::Approx(0.25));
}

TEST_CASE("coefficient scans reach 1/(n-1)") {
  const auto cfg = small_scan();
  for (int n = 2; n <= 5; ++n) {
    const auto b = scan_coefficient_bound(n, cfg);
    CHECK(b.empirical_max <= 1.0 / (n - 1) + 1e-9);
    CHECK(b.attained_ratio >= 0.999);
    CHECK_FALSE(b.violation);
    CHECK(b.evaluated >= cfg.samples);
  }
}

TEST_CASE("Hankel and Fekete-Szego scans") {
  const auto cfg = small_scan();
  const auto h22 = hankel_scan(HankelKind::H22, cfg);
  CHECK(h22.empirical_max == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(h22.violation);
  const auto fs2 = hankel_scan(HankelKind::FS, cfg, 2.0);
  CHECK(fs2.empirical_max <= 1.5 + 1e-9);
  CHECK(fs2.attained_ratio >= 0.999);
  const auto t = hankel_scan(HankelKind::T, cfg);
  CHECK(t.empirical_max <= 1.0 / 3.0 + 1e-9);
  const auto h31 = hankel_scan(HankelKind::H31, cfg);
  CHECK(h31.empirical_max >= 1.0 / 1296.0);
}

TEST_CASE("scans are deterministic") {
  const auto cfg = small_scan();
  const auto a = hankel_scan(HankelKind::FS, cfg, cplx(0.0, 1.0));
  const auto b = hankel_scan(HankelKind::FS, cfg, cplx(0.0, 1.0));
  CHECK(a.empirical_max == b.empirical_max);
  CHECK(a.witness.index() == b.witness.index());
}

TEST_CASE("psi surface") {
  CHECK(psi_exact(2, 1) == rational(1, 36));
  CHECK(psi_surface(2.0, 1.0) == doctest::Approx(1.0 / 36.0).epsilon(1e-14));
  CHECK(psi_surface(0.0, 1.0) == doctest::Approx(0.25).epsilon(1e-14));
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 10; ++j) {
      const rational c(i, 10), y(j, 10);
      CHECK(psi_surface(i / 10.0, j / 10.0) == doctest::Approx(oracle::to_double(psi_exact(c, y))).epsilon(1e-14));
    }
  // chi(c) * 288 = -7c^4 + 12c^2 + 72 has its maximum at c^2 = 6/7
  const rational c2(6, 7);
  const rational chi_max = (-7 * c2 * c2 + 12 * c2 + 72) / 288;
  CHECK(chi_max == rational(15, 56));
  const auto m = psi_surface_max();
  CHECK(m.value == doctest::Approx(oracle::to_double(chi_max)).epsilon(1e-12));
  CHECK(m.c == doctest::Approx(std::sqrt(6.0 / 7.0)).epsilon(1e-6));
  CHECK(m.y == doctest::Approx(1.0));
  const auto p = chi_profile(2001);
  CHECK(p.argmax == doctest::Approx(std::sqrt(6.0 / 7.0)).epsilon(1e-3));
  CHECK(p.rows.size() == 2001);
  CHECK_THROWS_AS(psi_surface_max(1, 5), Error);
}

TEST_CASE("scan configuration validation") {
  ScanConfig cfg;
  cfg.samples = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.samples = 10;
  cfg.tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}
