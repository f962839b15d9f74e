#include "fracinv/detect/bounds.hpp"
#include "fracinv/detect/lines.hpp"
#include "fracinv/detect/report.hpp"
#include "fracinv/io/corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace fracinv;
using namespace fracinv::detect;

namespace {

std::vector<Rational> origin_slopes(const InvariantReport& rep) {
  std::vector<Rational> out;
  for (const auto& c : rep.candidates)
    if (c.kind == CurveKind::LineOrigin && !c.infinite_family) {
      REQUIRE(c.params_exact);
      REQUIRE(c.param.at("m").is_rational());
      out.push_back(c.param.at("m").rat());
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_vertical_at(const InvariantReport& rep, const Rational& k) {
  for (const auto& c : rep.candidates)
    if (c.kind == CurveKind::LineVertical && !c.infinite_family && c.param.at("k").rat() == k)
      return true;
  return false;
}

void check_all_certified(const PolyField2D& f, const InvariantReport& rep) {
  for (const auto& c : rep.candidates) {
    if (c.infinite_family) continue;
    CHECK(c.cert.exact);
    REQUIRE_FALSE(c.g.is_zero());
    CHECK(darboux_check(f, c.g).invariant);
  }
}

BiPoly line_through_origin(const Rational& m) {
  BiPoly g;
  g.set_coeff(0, 1, Quad(1));
  g.set_coeff(1, 0, Quad(-m));
  return g;
}

} // namespace

TEST_CASE("three rational slopes out of the cubic condition") {
  auto f = io::corpus_field("ex3.1");
  auto rep = detect_lines_origin(f);
  CHECK(origin_slopes(rep) == std::vector<Rational>{Rational(-4), Rational(0), Rational(1)});
  check_all_certified(f, rep);
  CHECK_FALSE(has_vertical_at(rep, Rational(0)));
}

TEST_CASE("vertical axis plus two slopes") {
  auto f = io::corpus_field("ex3.2");
  auto rep = detect_lines_origin(f);
  CHECK(origin_slopes(rep) == std::vector<Rational>{Rational(-1), Rational(3)});
  CHECK(has_vertical_at(rep, Rational(0)));
  check_all_certified(f, rep);
}

TEST_CASE("two slopes from the quadratic clause") {
  auto f = io::corpus_field("ex3.3");
  auto rep = detect_lines_origin(f);
  CHECK(origin_slopes(rep) == std::vector<Rational>{Rational(-2), Rational(4)});
  check_all_certified(f, rep);
}

TEST_CASE("simultaneous linear and quadratic conditions") {
  auto f = io::corpus_field("ex3.4");
  auto rep = detect_lines_origin(f);
  CHECK(origin_slopes(rep) == std::vector<Rational>{Rational(2), Rational(3)});
  check_all_certified(f, rep);
}

TEST_CASE("identically satisfied condition yields the full pencil") {
  auto rep = detect_lines_origin(io::corpus_field("ex3.5"));
  REQUIRE(rep.classification == "infinite-family");
  bool family = false;
  for (const auto& c : rep.candidates) family = family || c.infinite_family;
  CHECK(family);
}

TEST_CASE("pure rotation admits no invariant line") {
  auto rep = detect_lines_origin(io::corpus_field("4.44"));
  CHECK(rep.candidates.empty());
  CHECK(rep.classification == "none");
}

TEST_CASE("mirrored slope pair of the restart-demo system") {
  auto f = io::corpus_field("4.4star");
  auto rep = detect_lines_origin(f);
  CHECK(origin_slopes(rep) == std::vector<Rational>{Rational(-3), Rational(3)});
  check_all_certified(f, rep);
}

TEST_CASE("zero field turns every line invariant") {
  PolyField2D zero;
  auto rep = detect_lines_origin(zero);
  CHECK(rep.classification == "infinite-family");
  auto axis = detect_lines_axis(zero);
  CHECK(axis.classification == "infinite-family");
}

TEST_CASE("affine detector recenters and finds shifted lines") {
  auto f = io::corpus_field("4.5");
  auto rep = detect_lines_affine(f);
  CHECK(has_vertical_at(rep, Rational(1)));
  // y = 3x - 2 and y = -x + 2, reported through the base point (1,1)
  int found = 0;
  for (const auto& c : rep.candidates) {
    if (c.kind != CurveKind::LineAffine) continue;
    REQUIRE(c.params_exact);
    auto m = c.param.at("m").rat();
    CHECK(c.param.at("x0").rat() == Rational(1));
    CHECK(c.param.at("y0").rat() == Rational(1));
    if (m == Rational(3) || m == Rational(-1)) ++found;
    // the implicit form passes the exact check in original coordinates
    CHECK(darboux_check(f, c.g).invariant);
  }
  CHECK(found == 2);
}

TEST_CASE("affine detector collapses to the origin detector on centered fields") {
  auto f = io::corpus_field("ex3.1");
  auto rep = detect_lines_affine(f);
  std::vector<Rational> slopes;
  for (const auto& c : rep.candidates)
    if (c.kind == CurveKind::LineAffine) slopes.push_back(c.param.at("m").rat());
  std::sort(slopes.begin(), slopes.end());
  CHECK(slopes == std::vector<Rational>{Rational(-4), Rational(0), Rational(1)});
}

TEST_CASE("tangency conditions vanish exactly at detected slopes and nowhere else") {
  for (const char* name : {"ex3.1", "ex3.2", "ex3.3", "ex3.4", "4.4star"}) {
    auto f = io::corpus_field(name);
    auto conds = tangency_conditions(f);
    REQUIRE_FALSE(conds.empty());
    UniPoly common = conds[0];
    for (std::size_t i = 1; i < conds.size(); ++i) common = UniPoly::gcd(common, conds[i]);
    auto slopes = origin_slopes(detect_lines_origin(f));
    // every detected slope is a common root
    for (const auto& m : slopes) CHECK(common.eval(Quad(m)).is_zero());
    // and the number of distinct real roots of the gcd matches
    auto roots = real_roots(common);
    CHECK(roots.all().size() == slopes.size());
  }
}

TEST_CASE("detected origin lines match an exhaustive slope-grid scan") {
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    PolyField2D f;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) {
        if (i == 0 && j == 0) continue; // keep the origin an equilibrium
        f.P.set_coeff(i, j, Quad(coef(rng)));
        f.Q.set_coeff(i, j, Quad(coef(rng)));
      }
    if (f.P.is_zero() && f.Q.is_zero()) continue;
    auto rep = detect_lines_origin(f);
    if (rep.classification == "infinite-family") continue;
    auto detected = origin_slopes(rep);
    // grid of candidate slopes p/q
    for (int p = -12; p <= 12; ++p)
      for (int q = 1; q <= 12; ++q) {
        Rational m(p, q);
        bool grid_says = darboux_check(f, line_through_origin(m)).invariant;
        bool detector_says = std::find(detected.begin(), detected.end(), m) != detected.end();
        CAPTURE(trial);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(grid_says == detector_says);
      }
  }
}

TEST_CASE("line-count bounds hold on the whole corpus") {
  for (const auto& name : io::corpus_names()) {
    auto f = io::corpus_field(name);
    auto rep = merge_reports({detect_lines_origin(f), detect_lines_axis(f),
                              detect_lines_affine(f)});
    auto bounds = validate_line_bounds(f, rep);
    CAPTURE(name);
    CHECK(bounds.ok);
    CHECK(bounds.violations.empty());
  }
}
