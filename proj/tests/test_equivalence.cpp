#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fringekit/equivalence.hpp"
#include "fringekit/errors.hpp"
#include "oracles.hpp"

using namespace fringekit;
using doctest::Approx;

TEST_CASE("fpi fwhm") {
  // mpmath: 2 asin((1 - r^2) / (2r)).
  CHECK(fpi_fwhm(0.999).width == Approx(2.00100133483524e-3).epsilon(1e-12));
  CHECK(fpi_fwhm(0.9999).width == Approx(2.00010001333483e-4).epsilon(1e-12));
  CHECK_FALSE(fpi_fwhm(0.9).low_finesse);

  const FpiWidth broad = fpi_fwhm(0.3);
  CHECK(broad.low_finesse);
  CHECK(broad.width == pi);
  CHECK_THROWS_AS(fpi_fwhm(1.0), std::invalid_argument);
}

TEST_CASE("nslit fwhm against the oracle") {
  // mpmath values for the pure grating factor.
  CHECK(nslit_fwhm(2) == Approx(pi / 2).epsilon(1e-10));
  CHECK(nslit_fwhm(10) == Approx(0.279520236979994).epsilon(1e-9));
  CHECK(nslit_fwhm(1000) == Approx(0.00278311595753499).epsilon(1e-9));
  CHECK(nslit_fwhm(10000) == Approx(0.000278311476851333).epsilon(1e-9));
  for (int n : {3, 17, 250}) CHECK(nslit_fwhm(n) == Approx(oracle::nslit_kpower_fwhm(n, 1)).epsilon(1e-9));
}

TEST_CASE("equivalent reflectivity") {
  SUBCASE("two slits") {
    const EquivalenceResult e = equivalent_reflectivity(2);
    CHECK(e.reflectivity == Approx((std::sqrt(6.0) - std::sqrt(2.0)) / 2).epsilon(1e-9));
    CHECK(e.relative_mismatch <= 1e-9);
  }
  SUBCASE("large N") {
    const EquivalenceResult e3 = equivalent_reflectivity(1000);
    const EquivalenceResult e4 = equivalent_reflectivity(10000);
    CHECK(e3.reflectivity == Approx(0.998609410686053).epsilon(1e-10));
    CHECK(e4.reflectivity == Approx(0.999860853944183).epsilon(1e-10));
    const double s3 = (1 - e3.reflectivity) * 1000, s4 = (1 - e4.reflectivity) * 10000;
    CHECK(std::abs(s4 / s3 - 1) < 0.05);
  }
  SUBCASE("round trip and monotonicity (property)") {
    oracle::Gen gen(31);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = gen.integer(2, 3000);
      const EquivalenceResult a = equivalent_reflectivity(n);
      const EquivalenceResult b = equivalent_reflectivity(n + gen.integer(1, 500));
      CHECK(std::abs(fpi_fwhm(a.reflectivity).width - a.nslit_width) <= 1e-9 * a.nslit_width);
      CHECK(a.relative_mismatch <= 1e-9);
      CHECK(b.reflectivity > a.reflectivity);
    }
  }
  SUBCASE("bad brackets") {
    EquivalenceOptions opts;
    opts.r_lo = 0.9;
    opts.r_hi = 0.95;
    CHECK_THROWS_AS(equivalent_reflectivity(1000, opts), BracketError);
    CHECK_THROWS_AS(equivalent_reflectivity(1), std::invalid_argument);
  }
}
