#include "fracinv/frac/caputo.hpp"
#include "fracinv/frac/gamma.hpp"

#include <doctest.h>

#include <cmath>
#include <initializer_list>

using namespace fracinv::frac;

TEST_CASE("derivatives of powers follow the gamma-ratio law") {
  // constants die
  CHECK(caputo_power(0.0, 0.5, 2.0) == 0.0);
  CHECK(caputo_power(0.0, 0.9, 0.3) == 0.0);
  // D^{1/2} t = t^{1/2} / Gamma(3/2)
  for (double t : {0.25, 1.0, 3.0}) {
    CHECK(caputo_power(1.0, 0.5, t) ==
          doctest::Approx(1.1283791670955125739 * std::sqrt(t)).epsilon(1e-14));
  }
  // D^{1/2} t^2 at t = 1: Gamma(3)/Gamma(5/2)
  CHECK(caputo_power(2.0, 0.5, 1.0) == doctest::Approx(1.5045055561273502).epsilon(1e-13));
  // alpha = 1 is the classical derivative
  CHECK(caputo_power(3.0, 1.0, 2.0) == doctest::Approx(12.0).epsilon(1e-13));
  CHECK(caputo_power(1.0, 1.0, 5.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("integral of powers and semigroup composition") {
  // I^{1/2} t^{1/2} = Gamma(3/2)/Gamma(2) t
  CHECK(frac_integral_power(0.5, 0.5, 1.0) ==
        doctest::Approx(0.88622692545275801365).epsilon(1e-13));
  // I^a I^b t^p = I^{a+b} t^p, checked through the scalar prefactors
  double p = 1.5, a = 0.3, b = 0.4, t = 2.0;
  double once = frac_integral_power(p, a + b, t);
  double inner = frac_integral_power(p, a, 1.0);           // factor on t^{p+a}
  double outer = frac_integral_power(p + a, b, t) * inner; // then integrate again
  CHECK(once == doctest::Approx(outer).epsilon(1e-12));
}

TEST_CASE("derivative and integral invert on powers") {
  // I^alpha (D^alpha t^p) = t^p for p > 0 (no constant term to lose)
  double alpha = 0.6, p = 2.0, t = 1.7;
  double d = caputo_power(p, alpha, 1.0);                // scalar on t^{p-alpha}
  double back = frac_integral_power(p - alpha, alpha, t) * d;
  CHECK(back == doctest::Approx(std::pow(t, p)).epsilon(1e-12));
}

TEST_CASE("termwise polynomial derivative") {
  std::vector<double> c{1.0, 2.0, 0.0, 4.0}; // 1 + 2t + 4t^3
  double alpha = 0.6, t = 1.5;
  double want = 2.0 * caputo_power(1.0, alpha, t) + 4.0 * caputo_power(3.0, alpha, t);
  CHECK(caputo_poly(c, alpha, t) == doctest::Approx(want).epsilon(1e-13));
  // empty and constant-only polynomials
  CHECK(caputo_poly({}, alpha, t) == 0.0);
  CHECK(caputo_poly({7.0}, alpha, t) == 0.0);
}
