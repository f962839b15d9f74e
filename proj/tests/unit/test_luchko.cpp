#include "fracinv/frac/caputo.hpp"
#include "fracinv/frac/luchko.hpp"
#include "fracinv/frac/ml.hpp"

#include <doctest.h>

#include <cmath>
#include <initializer_list>

using namespace fracinv::frac;

TEST_CASE("unforced case is the Mittag-Leffler relaxation") {
  auto zero = [](double) { return 0.0; };
  for (double alpha : {0.4, 0.7, 1.0}) {
    for (double t : {0.3, 1.0, 2.5}) {
      auto r = solve_scalar_linear(-1.0, zero, 2.0, alpha, t);
      CAPTURE(alpha);
      CAPTURE(t);
      CHECK(r.value ==
            doctest::Approx(2.0 * ml_real(-std::pow(t, alpha), alpha)).epsilon(1e-9));
    }
  }
}

TEST_CASE("classical limit with constant forcing") {
  // x' = -x + 1, x(0) = 0 -> x = 1 - e^{-t}
  auto one = [](double) { return 1.0; };
  for (double t : {0.5, 1.0, 3.0}) {
    auto r = solve_scalar_linear(-1.0, one, 0.0, 1.0, t);
    CHECK(r.value == doctest::Approx(1.0 - std::exp(-t)).epsilon(1e-8));
  }
}

TEST_CASE("fractional constant forcing hits the known closed form") {
  // D^alpha x = -x + 1, x(0) = 0 -> x = 1 - E_alpha(-t^alpha)
  auto one = [](double) { return 1.0; };
  for (double alpha : {0.5, 0.8}) {
    for (double t : {0.4, 1.0, 2.0}) {
      auto r = solve_scalar_linear(-1.0, one, 0.0, alpha, t);
      CAPTURE(alpha);
      CAPTURE(t);
      CHECK(r.value ==
            doctest::Approx(1.0 - ml_real(-std::pow(t, alpha), alpha)).epsilon(1e-8));
      CHECK(r.quad_error >= 0);
      CHECK(r.quad_error < 1e-6);
    }
  }
}

TEST_CASE("pure integration recovers the fractional integral") {
  // lambda = 0, q = tau: x = x0 + I^alpha q
  auto ramp = [](double tau) { return tau; };
  double alpha = 0.5, t = 1.3;
  auto r = solve_scalar_linear(0.0, ramp, 0.25, alpha, t);
  CHECK(r.value == doctest::Approx(0.25 + frac_integral_power(1.0, alpha, t)).epsilon(1e-8));
}
