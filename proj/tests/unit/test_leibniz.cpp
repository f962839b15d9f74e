#include "fracinv/frac/leibniz.hpp"

#include <doctest.h>

#include <cmath>

using namespace fracinv::frac;

TEST_CASE("classical order obeys the product rule") {
  auto d = leibniz_obstruction(2, 3, 1.0, 1.7, 4);
  CHECK(d.defect == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d.direct == doctest::Approx(5 * std::pow(1.7, 4)).epsilon(1e-12));
}

TEST_CASE("a constant factor never obstructs") {
  auto d = leibniz_obstruction(2, 0, 0.6, 1.3, 3);
  CHECK(d.defect == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fractional orders break the two-term rule") {
  // p = q = 1, alpha = 1/2, t = 1: direct = 2/Gamma(5/2), naive = 2/Gamma(3/2)
  auto d = leibniz_obstruction(1, 1, 0.5, 1.0, 3);
  CHECK(d.direct == doctest::Approx(1.5045055561273501).epsilon(1e-12));
  CHECK(d.product_rule == doctest::Approx(2.2567583341910252).epsilon(1e-12));
  CHECK(std::abs(d.defect) > 0.5);
}

TEST_CASE("the full series closes the gap the two-term rule leaves") {
  auto d = leibniz_obstruction(2, 2, 0.7, 1.3, 3); // terms > q
  CHECK(std::abs(d.defect) > 1e-3);                // naive rule fails
  CHECK(d.series_sum == doctest::Approx(d.direct).epsilon(1e-10));
  CHECK(std::abs(d.series_defect) < 1e-10);

  auto trunc = leibniz_obstruction(2, 2, 0.7, 1.3, 0); // k = 0 term only
  CHECK(std::abs(trunc.series_defect) > 1e-3);
}

TEST_CASE("the obstruction fades as the order approaches one") {
  double far = std::abs(leibniz_obstruction(2, 3, 0.7, 1.1, 4).defect);
  double near = std::abs(leibniz_obstruction(2, 3, 0.999, 1.1, 4).defect);
  CHECK(near < 0.05 * far);
}
