#include "fracinv/equilibria.hpp"
#include "fracinv/io/corpus.hpp"

#include <doctest.h>

#include <cmath>

using namespace fracinv;

namespace {
const Equilibrium* find_at(const EquilibriaResult& r, double x, double y) {
  for (const auto& e : r.points)
    if (std::hypot(e.x - x, e.y - y) < 1e-8) return &e;
  return nullptr;
}
} // namespace

TEST_CASE("origin saddle of the conservative system") {
  auto r = find_equilibria(io::corpus_field("4.7"));
  auto* origin = find_at(r, 0, 0);
  REQUIRE(origin != nullptr);
  CHECK(origin->saddle());
  CHECK(origin->residual < 1e-12);
  // jacobian at the origin is the linear part [[0,1],[1,0]]
  CHECK(origin->jac(0, 1) == doctest::Approx(1));
  CHECK(origin->jac(1, 0) == doctest::Approx(1));
  CHECK(origin->jac(0, 0) == doctest::Approx(0));
}

TEST_CASE("linear rotation system has a single non-saddle equilibrium") {
  auto r = find_equilibria(io::corpus_field("4.44"));
  REQUIRE(r.points.size() == 1);
  CHECK(find_at(r, 0, 0) != nullptr);
  CHECK_FALSE(r.points[0].saddle()); // eigenvalues 1 +- 3i, det > 0
}

TEST_CASE("equilibria of the translated-line system sit on x = 1") {
  // P = 2(x-1)^2 and Q(1,y) = (y-1)^2: a single degenerate point at (1,1)
  auto r = find_equilibria(io::corpus_field("4.5"));
  CHECK(find_at(r, 1, 1) != nullptr);
  for (const auto& e : r.points) CHECK(e.residual < 1e-9);
}

TEST_CASE("zero field is degenerate, not a list of points") {
  PolyField2D zero;
  auto r = find_equilibria(zero);
  CHECK(r.degenerate);
}

TEST_CASE("jacobian_at matches the analytic derivative") {
  auto f = io::corpus_field("4.4star");
  // P = x - y + 2x^2 - xy, Q = -9x + y - y^2 + 2xy
  // at (1, 2): P_x = 1 + 4x - y = 3, P_y = -1 - x = -2,
  //            Q_x = -9 + 2y = -5, Q_y = 1 - 2y + 2x = -1
  auto J = jacobian_at(f, 1, 2);
  CHECK(J(0, 0) == doctest::Approx(3));
  CHECK(J(0, 1) == doctest::Approx(-2));
  CHECK(J(1, 0) == doctest::Approx(-5));
  CHECK(J(1, 1) == doctest::Approx(-1));
}
