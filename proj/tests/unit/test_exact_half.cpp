#include "fracinv/frac/exact_half.hpp"
#include "fracinv/frac/fam.hpp"
#include "fracinv/frac/ml.hpp"

#include <doctest.h>

#include <cmath>
#include <initializer_list>

using namespace fracinv::frac;

TEST_CASE("manifold coefficient equals 4/pi - 1") {
  CHECK(half_saddle_manifold_coefficient() ==
        doctest::Approx(4.0 / M_PI - 1.0).epsilon(1e-10));
}

TEST_CASE("y component is pure Mittag-Leffler decay") {
  for (double t : {0.1, 1.0, 4.0}) {
    auto p = half_saddle_solution(0.3, 0.5, t);
    CHECK(p[1] == doctest::Approx(0.5 * ml_real(-std::sqrt(t), 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("x component decouples when y starts at zero") {
  for (double t : {0.2, 1.0, 2.5}) {
    auto p = half_saddle_solution(0.7, 0.0, t);
    CHECK(p[0] == doctest::Approx(0.7 * ml_real(std::sqrt(t), 0.5)).epsilon(1e-10));
  }
}

TEST_CASE("closed form matches the time-stepping solver") {
  RHS2 rhs = [](double, const std::array<double, 2>& x) {
    return std::array<double, 2>{x[0] - x[1] * x[1], -x[1]};
  };
  double c1 = 0.3, c2 = 0.5;
  auto tr = fam_solve(rhs, {c1, c2}, 0.5, 1.0, 512);
  auto want = half_saddle_solution(c1, c2, 1.0);
  CHECK(tr.x.back()[0] == doctest::Approx(want[0]).epsilon(5e-3));
  CHECK(tr.x.back()[1] == doctest::Approx(want[1]).epsilon(5e-3));
}

TEST_CASE("starting on the claimed manifold does not keep you on it") {
  double K = half_saddle_manifold_coefficient();
  double c2 = 1.0, c1 = -K * c2 * c2;
  auto p1 = half_saddle_solution(c1, c2, 1.0);
  // if x = -K y^2 were invariant this would vanish; it is order one instead
  CHECK(std::abs(p1[0] + K * p1[1] * p1[1]) > 1.0);
  // both contributions to x share a sign, so the escape is monotone
  auto p4 = half_saddle_solution(c1, c2, 4.0);
  CHECK(p1[0] < 0);
  CHECK(p4[0] < p1[0]);
}
