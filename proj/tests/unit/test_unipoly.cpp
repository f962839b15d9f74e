#include "fracinv/unipoly.hpp"

#include <doctest.h>

#include <complex>

using namespace fracinv;

namespace {
UniPoly from_ints(std::initializer_list<int> cs) {
  std::vector<Quad> v;
  for (int c : cs) v.emplace_back(c);
  return UniPoly(std::move(v));
}
} // namespace

TEST_CASE("construction trims and reports degree") {
  CHECK(UniPoly().is_zero());
  CHECK(UniPoly().degree() == -1);
  CHECK(from_ints({1, 2, 0, 0}).degree() == 1);
  CHECK(from_ints({0}).is_zero());
  CHECK(UniPoly::monomial(3, Quad(2)).degree() == 3);
  CHECK(UniPoly::constant(Quad(5)).degree() == 0);
}

TEST_CASE("arithmetic and evaluation") {
  UniPoly p = from_ints({1, -3, 2}); // 2x^2 - 3x + 1 = (2x-1)(x-1)
  CHECK(p.eval(Quad(1)).is_zero());
  CHECK(p.eval(Quad(Rational(1, 2))).is_zero());
  CHECK(p.eval_d(2.0) == doctest::Approx(3.0));
  UniPoly q = from_ints({-1, 1}); // x - 1
  CHECK((p + q).eval_d(2) == doctest::Approx(4.0));
  CHECK((p * q).degree() == 3);
  CHECK((p - p).is_zero());
  CHECK((-p + p).is_zero()); // unary minus regression
  CHECK(p.derivative() == from_ints({-3, 4}));
}

TEST_CASE("divmod is exact euclidean division") {
  UniPoly p = from_ints({1, -3, 2});
  UniPoly d = from_ints({-1, 1});
  UniPoly q, r;
  UniPoly::divmod(p, d, q, r);
  CHECK(r.is_zero());
  CHECK(q == from_ints({-1, 2})); // 2x - 1
  // non-divisible case keeps remainder degree below the divisor
  UniPoly::divmod(from_ints({1, 0, 1}), d, q, r);
  CHECK(r.degree() == 0);
  CHECK(r.coeff(0).rat() == Rational(2)); // x^2+1 = (x+1)(x-1) + 2
  CHECK_THROWS(UniPoly::divmod(p, UniPoly(), q, r));
}

TEST_CASE("gcd is monic and exact") {
  UniPoly a = from_ints({-1, 0, 1});  // x^2 - 1
  UniPoly b = from_ints({1, -2, 1});  // (x-1)^2
  UniPoly g = UniPoly::gcd(a, b);
  CHECK(g == from_ints({-1, 1}));
  CHECK(UniPoly::gcd(UniPoly(), UniPoly()).is_zero());
  CHECK(UniPoly::gcd(a, UniPoly()) == a.monic());
  // coprime polynomials give gcd 1
  CHECK(UniPoly::gcd(from_ints({1, 1}), from_ints({2, 1})).degree() == 0);
}

TEST_CASE("real roots of a factorable cubic are exact") {
  // (x-1)(x-2)(x+3) = x^3 - 7x + 6
  UniPoly p = from_ints({6, -7, 0, 1});
  auto roots = real_roots(p);
  CHECK(roots.all_exact);
  REQUIRE(roots.exact.size() == 3);
  auto all = roots.all();
  REQUIRE(all.size() == 3);
  CHECK(all[0] == doctest::Approx(-3));
  CHECK(all[1] == doctest::Approx(1));
  CHECK(all[2] == doctest::Approx(2));
}

TEST_CASE("quadratic irrational roots stay exact in the extension") {
  UniPoly p = from_ints({-2, 0, 1}); // x^2 - 2
  auto roots = real_roots(p);
  CHECK(roots.all_exact);
  REQUIRE(roots.exact.size() == 2);
  for (const auto& r : roots.exact) CHECK(p.eval(r).is_zero());
}

TEST_CASE("complex roots of x^2 + 1") {
  auto roots = complex_roots(from_ints({1, 0, 1}));
  REQUIRE(roots.size() == 2);
  for (auto z : roots) {
    CHECK(std::abs(z.real()) < 1e-12);
    CHECK(std::abs(std::abs(z.imag()) - 1.0) < 1e-12);
  }
}
