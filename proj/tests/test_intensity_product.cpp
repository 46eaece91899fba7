#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fringekit/errors.hpp"
#include "fringekit/fringe_models.hpp"
#include "fringekit/intensity_product.hpp"
#include "fringekit/resolution.hpp"
#include "oracles.hpp"

using namespace fringekit;
using doctest::Approx;

TEST_CASE("product order validation") {
  CHECK(ProductOrder(3).value() == 3);
  CHECK_THROWS_AS(ProductOrder(0), std::invalid_argument);
}

TEST_CASE("stable power") {
  CHECK(stable_power(0.5, 3) == Approx(0.125).epsilon(1e-14));
  CHECK(stable_power(1.0, 100) == 1.0);
  CHECK(stable_power(0.0, 100) == 0.0);
  CHECK(stable_power(1e-301, 2) == 0.0);
  CHECK(stable_power(1e-5, 100) == 0.0);  // underflows quietly
}

TEST_CASE("kth order correlation") {
  const auto peak = kth_order_correlation(0.0, 2.0, ProductOrder(1));
  CHECK(peak.normalized == 1.0);
  CHECK(peak.absolute() == Approx(1.0).epsilon(1e-14));  // (2/4) * 2

  for (int k : {1, 5, 100}) {
    const auto null = kth_order_correlation(pi, 3.0, ProductOrder(k));
    CHECK(null.normalized == 0.0);
    CHECK(null.absolute() == 0.0);
  }
  CHECK(kth_order_correlation(pi / 2, 1.0, ProductOrder(2)).normalized ==
        Approx(0.25).epsilon(1e-14));

  // (I0 / 2^(K+1))^K (1 + cos phi)^K for small K, directly.
  const double i0 = 5.0, phi = 0.7;
  const double direct = std::pow(i0 / 8.0, 2) * std::pow(1.0 + std::cos(phi), 2);
  CHECK(kth_order_correlation(phi, i0, ProductOrder(2)).absolute() ==
        Approx(direct).epsilon(1e-13));

  // K = 100 with I0 = 1: 2^(-10100) underflows but the normalized value is
  // still available.
  const auto deep = kth_order_correlation(0.1, 1.0, ProductOrder(100));
  CHECK(deep.normalized > 0.0);
  CHECK(std::isfinite(deep.log_value));
  CHECK_THROWS_AS(deep.absolute(), std::range_error);
  CHECK_THROWS_AS(kth_order_correlation(0.0, 0.0, ProductOrder(1)), std::invalid_argument);
}

TEST_CASE("kth power of evaluators") {
  const PhaseInterval w{-pi, pi};
  SUBCASE("constant fringe") {
    const Fringe c = [](double) { return 0.5; };
    CHECK(kth_power(c, ProductOrder(3))(0.2) == Approx(0.125).epsilon(1e-14));
    CHECK(kth_power(c, ProductOrder(3), w, true)(0.2) == 1.0);
  }
  SUBCASE("gaussian^4 is gaussian with sigma/2") {
    const double sigma = 1.3;
    const auto g4 = kth_power(make_fringe(ProfileSpec(ProfileKind::gaussian, sigma)),
                              ProductOrder(4));
    oracle::Gen gen(11);
    for (int i = 0; i < 200; ++i) {
      const double x = gen.uniform(-3.0, 3.0);
      CHECK(g4(x) == Approx(profile_value(x, ProfileSpec(ProfileKind::gaussian, sigma / 2)))
                         .epsilon(1e-12));
    }
  }
  SUBCASE("((1 + cos)/2)^2 = cos^4(phi/2)") {
    const auto f = kth_power(make_fringe(MziSpec()), ProductOrder(2), w, true);
    for (double phi = -3.0; phi <= 3.0; phi += 0.25)
      CHECK(f(phi) == Approx(std::pow(std::cos(phi / 2), 4)).epsilon(1e-12));
  }
  SUBCASE("all-zero fringe cannot be normalized") {
    const Fringe zero = [](double) { return 0.0; };
    CHECK_THROWS_AS(kth_power(zero, ProductOrder(2), w, true), NormalizationError);
  }
}

TEST_CASE("kth power invariants (property)") {
  oracle::Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.integer(2, 60);
    const FringeModel model = NSlitSpec::pure_grating(n);
    const PhaseInterval w = default_window(model);
    const int k1 = gen.integer(1, 10), k2 = gen.integer(1, 10);
    const Fringe base = make_fringe(model);
    const auto p1 = kth_power(base, ProductOrder(k1), w, true);
    const auto chained = kth_power(p1, ProductOrder(k2), w, true);
    const auto direct = kth_power(base, ProductOrder(k1 * k2), w, true);

    // Principal maximum stays where it was and keeps value 1.
    CHECK(p1(0.0) == Approx(1.0).epsilon(1e-12));
    CHECK(direct(0.0) == Approx(1.0).epsilon(1e-12));
    // Zeros of the grating factor stay zeros.
    CHECK(p1(pi / n) <= 1e-20);

    for (int i = 0; i < 25; ++i) {
      const double x = gen.uniform(w.lo, w.hi);
      CHECK(std::abs(chained(x) - direct(x)) <= 1e-12);
      CHECK(p1(x) <= 1.0 + 1e-15);
    }
  }
}

TEST_CASE("kth power of sampled fringes") {
  const SampledFringe s = SampledFringe::sample(make_fringe(MziSpec(2.0)), {-pi, pi}, 101);
  const SampledFringe p = kth_power(s, ProductOrder(3), true);
  CHECK(p.size() == s.size());
  CHECK(p.value(50) == 1.0);  // argmax preserved
  CHECK(p.value(0) == 0.0);   // null preserved
  CHECK(find_principal_peak(p).position == find_principal_peak(s).position);
  const SampledFringe zero(0.0, 1.0, {0.0, 0.0, 0.0});
  CHECK_THROWS_AS(kth_power(zero, ProductOrder(2), true), NormalizationError);
}
