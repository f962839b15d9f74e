#include "fracinv/frac/gamma.hpp"
#include "fracinv/frac/ml.hpp"
#include "fracinv/frac/ml_internal.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace fracinv::frac;
using cplx = std::complex<double>;

namespace {

// relative distance in the complex plane
double rdist(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

} // namespace

TEST_CASE("alpha = 1 collapses to the exponential") {
  for (double x = -5.0; x <= 5.0; x += 0.5) {
    auto r = ml_full(cplx(x, 0), 1.0);
    CHECK(r.method == "closed-form-exp");
    CHECK(std::abs(r.value.real() - std::exp(x)) <= 1e-12 * std::exp(x));
    CHECK(std::abs(r.value.imag()) == 0.0);
  }
  // complex argument too
  cplx z(0.3, -1.7);
  CHECK(rdist(ml(z, 1.0), std::exp(z)) < 1e-14);
}

TEST_CASE("half order on the real line uses the erfc closed form") {
  auto r = ml_full(cplx(-1, 0), 0.5);
  CHECK(r.method == "closed-form-erfc");
  CHECK(r.value.real() == doctest::Approx(0.42758357615580700441).epsilon(1e-14));

  auto p = ml_full(cplx(std::sqrt(2.0), 0), 0.5);
  CHECK(p.method == "closed-form-erfc");
  CHECK(p.value.real() == doctest::Approx(14.441908195414959242).epsilon(1e-13));

  // E_{1/2}(x) = exp(x^2) erfc(-x) directly
  for (double x : {-3.0, -0.5, 0.0, 0.8, 2.0}) {
    double want = std::exp(x * x) * (x >= 0 ? 2.0 - std::erfc(x) : std::erfc(-x));
    CHECK(ml_real(x, 0.5) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("frozen values across orders and argument regimes") {
  // moderate positive arguments
  CHECK(ml_real(1.3, 0.5, 0.5) == doctest::Approx(14.189903947076975040).epsilon(1e-12));
  CHECK(ml_real(4.0, 0.75) == doctest::Approx(762.96668169426913489).epsilon(1e-12));
  CHECK(ml_real(4.0 * std::pow(2.0, 0.75), 0.75) ==
        doctest::Approx(436651.38370896790636).epsilon(1e-11));
  // strongly cancelling negative arguments at small alpha
  CHECK(ml_real(-5.0, 0.3) == doctest::Approx(0.13708086902027063758).epsilon(1e-10));
  CHECK(ml_real(-6.0, 0.3) == doctest::Approx(0.11646113163059886741).epsilon(1e-10));
  // large positive argument at small alpha grows double-exponentially
  CHECK(ml_real(4.8, 0.3) == doctest::Approx(3.4847312112630288937e+81).epsilon(1e-10));
  // complex arguments
  CHECK(rdist(ml(cplx(1, 3), 0.7),
              cplx(0.11232549291218895464, -0.36700891743241961677)) < 1e-11);
  CHECK(rdist(ml(cplx(0, 5.5), 0.9, 0.9),
              cplx(0.38121444575438305652, 0.17796068167292376944)) < 1e-11);
}

TEST_CASE("cancellation certificate rejects the naive series when it must") {
  // at alpha = 0.3, z = -6 the double series cancels catastrophically; the
  // tiered evaluator must not report it as a plain series result
  auto r = ml_full(cplx(-6, 0), 0.3);
  CHECK(r.method != "series-double");
  // small argument is honest series territory
  auto s = ml_full(cplx(0.2, 0.1), 0.6);
  CHECK(s.method == "series-double");
}

TEST_CASE("conjugate symmetry holds for real orders") {
  for (cplx z : {cplx(1.2, 0.7), cplx(-2.0, 1.5), cplx(0.4, -3.0)}) {
    for (double alpha : {0.4, 0.8}) {
      cplx a = ml(z, alpha), b = ml(std::conj(z), alpha);
      CHECK(rdist(std::conj(a), b) < 1e-11);
    }
  }
}

TEST_CASE("recurrence in the second parameter") {
  // E_{a,b}(z) = 1/Gamma(b) + z * E_{a,a+b}(z)
  for (double alpha : {0.6, 0.9}) {
    for (cplx z : {cplx(0.7, 0), cplx(-1.2, 0), cplx(1, 0.5)}) {
      cplx lhs = ml(z, alpha, 1.0);
      cplx rhs = cplx(rgamma(1.0), 0) + z * ml(z, alpha, alpha + 1.0);
      CHECK(rdist(lhs, rhs) < 1e-11);
    }
  }
}

TEST_CASE("derivative matches finite differences and the k = 1 limit") {
  CHECK(ml_deriv_real(0.0, 0.7) == doctest::Approx(rgamma(1.7)).epsilon(1e-12));
  for (double x : {-1.5, -0.3, 0.6, 2.0}) {
    double h = 1e-6 * std::max(1.0, std::abs(x));
    double fd = (ml_real(x + h, 0.7) - ml_real(x - h, 0.7)) / (2 * h);
    CHECK(ml_deriv_real(x, 0.7) == doctest::Approx(fd).epsilon(1e-7));
  }
  // alpha = 1: derivative of e^x
  CHECK(ml_deriv_real(1.5, 1.0) == doctest::Approx(std::exp(1.5)).epsilon(1e-11));
}

TEST_CASE("scaled complementary error function") {
  CHECK(erfcx_fn(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (double x : {0.3, 1.0, 2.0}) {
    CHECK(erfcx_fn(x) * std::exp(-x * x) == doctest::Approx(std::erfc(x)).epsilon(1e-13));
  }
  // asymptotic regime where naive exp(x^2)*erfc(x) would be 0 * inf
  CHECK(erfcx_fn(50.0) * 50.0 * std::sqrt(M_PI) == doctest::Approx(1.0).epsilon(3e-4));
  CHECK(std::isfinite(erfcx_fn(1e4)));
}

TEST_CASE("independent strategies agree on their overlap") {
  // the series and contour tiers are both usable on a moderate annulus for
  // alpha below one; they are independent algorithms and must agree
  int compared = 0;
  for (double alpha : {0.55, 0.8}) {
    for (double r : {0.5, 2.0}) {
      for (int k = 0; k < 6; ++k) {
        double phi = k * M_PI / 3.0;
        cplx z = std::polar(r, phi);
        auto a = ml_strategy_series(z, alpha, 1.0);
        auto b = ml_strategy_contour(z, alpha, 1.0);
        if (!a.usable || !b.usable) continue;
        ++compared;
        CHECK(rdist(a.value, b.value) < 1e-9);
      }
    }
  }
  CHECK(compared >= 12);
}

TEST_CASE("result metadata is populated") {
  auto r = ml_full(cplx(1.0, 0), 0.8);
  CHECK(r.work > 0);
  CHECK(r.err_estimate >= 0);
  CHECK_FALSE(r.method.empty());
}
