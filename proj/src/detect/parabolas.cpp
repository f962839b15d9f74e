#include "fracinv/detect/parabolas.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracinv::detect {

namespace {

std::string num_str(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

bool check_quadratic_centered(const PolyField2D& f, InvariantReport& rep) {
  if (f.degree() > 2) throw std::invalid_argument("field degree exceeds 2");
  if (!f.P.coeff(0, 0).is_zero() || !f.Q.coeff(0, 0).is_zero()) {
    rep.diagnostics.push_back(
        "constant terms present; the origin-centered parabola conditions do not apply");
    return false;
  }
  return true;
}

// y = m x^2 detection on (possibly swapped) coordinates. `swapped` only
// affects labels/kinds; the caller re-maps the geometry.
InvariantReport parabola_core(const PolyField2D& f, bool swapped) {
  InvariantReport rep;
  if (!check_quadratic_centered(f, rep)) {
    rep.classify();
    return rep;
  }
  QuadCoeffs c = quad_coeffs(f);
  auto name = [&](const char* an, const char* bn) { return swapped ? bn : an; };

  // gate condition: b1 = 0, b4 = 2 a5, a4 = 0
  std::vector<std::string> violated;
  if (!c.b1.is_zero())
    violated.push_back(std::string(name("b1", "a2")) + " = " + c.b1.str() + " (must be 0)");
  if (c.b4 != c.a5 * Quad(2))
    violated.push_back(std::string(name("b4", "a3")) + " = " + c.b4.str() + " != 2*" +
                       name("a5", "b5") + " = " + (c.a5 * Quad(2)).str());
  if (!c.a4.is_zero())
    violated.push_back(std::string(name("a4", "b3")) + " = " + c.a4.str() + " (must be 0)");
  if (!violated.empty()) {
    for (const auto& v : violated)
      rep.diagnostics.push_back("condition (1) fails: " + v);
    rep.classify();
    return rep;
  }

  bool linear_allm = c.b3.is_zero() && c.b2 == c.a1 * Quad(2);   // x^2-condition holds for all m
  bool cross_allm = c.a2.is_zero() && c.b5 == c.a3 * Quad(2);    // x^3-condition holds for all m

  // geometry is built in core coordinates (y = m x^2); the x = m y^2 wrapper
  // swaps g and recertifies afterwards
  auto emit = [&](const Quad& m, const std::string& clause) {
    if (m.is_zero()) {
      CurveCandidate lc;
      lc.kind = swapped ? CurveKind::LineVertical : CurveKind::LineHorizontal;
      lc.set_param("k", Quad(0));
      lc.g = BiPoly::var_y();
      lc.clause = clause + " (degenerate: m = 0 is a line, not a parabola)";
      lc.cert = certify_exact(f, lc.g);
      lc.label = swapped ? "x = 0" : "y = 0";
      rep.candidates.push_back(lc);
      rep.diagnostics.push_back("m = 0 degenerates to the line " + lc.label);
      return;
    }
    CurveCandidate cc;
    cc.kind = swapped ? CurveKind::ParabolaXofY : CurveKind::ParabolaYofX;
    cc.set_param("m", m);
    cc.g = BiPoly::var_y() - BiPoly::monomial(2, 0, m);
    cc.clause = clause;
    cc.cert = certify_exact(f, cc.g);
    cc.label = swapped ? ("x = " + m.str() + "*y^2") : ("y = " + m.str() + "*x^2");
    rep.candidates.push_back(cc);
  };

  if (linear_allm && cross_allm) {
    CurveCandidate cc;
    cc.kind = swapped ? CurveKind::ParabolaXofY : CurveKind::ParabolaYofX;
    cc.infinite_family = true;
    cc.family_desc = swapped ? "x = m*y^2 for every real m" : "y = m*x^2 for every real m";
    cc.clause = "case 2(d): every m";
    cc.cert.exact = true;
    cc.cert.kind = "tangency-identity";
    cc.cert.detail = "all tangency coefficients vanish identically in m";
    cc.label = cc.family_desc;
    rep.candidates.push_back(cc);
    rep.diagnostics.push_back("family includes the degenerate member m = 0 (a line)");
  } else if (linear_allm) {
    // only the x^3-condition pins m: b5 - 2 a2 m - 2 a3 = 0
    if (c.a2.is_zero()) {
      rep.diagnostics.push_back("no m: the x^3 tangency coefficient cannot vanish (" +
                                std::string(name("a2", "b1")) + " = 0, " + name("b5", "a5") +
                                " != 2*" + name("a3", "b4") + ")");
    } else {
      emit((c.b5 - c.a3 * Quad(2)) / (c.a2 * Quad(2)), "case 2(a)");
    }
  } else if (cross_allm) {
    // only the x^2-condition pins m: b2 m + b3 - 2 a1 m = 0
    if (c.b2 == c.a1 * Quad(2)) {
      rep.diagnostics.push_back("no m: the x^2 tangency coefficient cannot vanish (" +
                                std::string(name("b2", "a1")) + " = 2*" + name("a1", "b2") +
                                " but " + name("b3", "a4") + " != 0)");
    } else {
      emit(-c.b3 / (c.b2 - c.a1 * Quad(2)), "case 2(b)");
    }
  } else {
    // both conditions active: the two m values must agree
    if (c.b2 == c.a1 * Quad(2) || c.a2.is_zero()) {
      rep.diagnostics.push_back("no m: a pinned tangency coefficient has no root");
      rep.classify();
      return rep;
    }
    Quad m_linear = -c.b3 / (c.b2 - c.a1 * Quad(2));
    Quad m_cross = (c.b5 - c.a3 * Quad(2)) / (c.a2 * Quad(2));
    if (m_linear == m_cross) {
      // cross-compatibility constraint value (zero exactly here)
      Quad constraint = c.a2 * c.b3 * Quad(2) + c.b2 * c.b5 - c.b2 * c.a3 * Quad(2) -
                        c.a1 * c.b5 * Quad(2) + c.a1 * c.a3 * Quad(4);
      emit(m_linear, "case 2(c)");
      rep.diagnostics.push_back("compatibility constraint value: " + constraint.str());
    } else {
      rep.diagnostics.push_back("no m: the x^2 condition gives m = " + m_linear.str() +
                                " but the x^3 condition gives m = " + m_cross.str());
    }
  }
  rep.classify();
  return rep;
}

} // namespace

InvariantReport detect_parabola_y_of_x(const PolyField2D& f) {
  return parabola_core(f, false);
}

InvariantReport detect_parabola_x_of_y(const PolyField2D& f) {
  // swap x <-> y and the two components; y = m x^2 there is x = m y^2 here
  PolyField2D swapped{f.Q.swap_xy(), f.P.swap_xy()};
  InvariantReport rep = parabola_core(swapped, true);
  // candidate geometry must be mapped back: g was built in swapped coordinates
  for (auto& c : rep.candidates) {
    if (!c.g.is_zero()) {
      c.g = c.g.swap_xy();
      if (c.cert.exact) c.cert = certify_exact(f, c.g);
    }
  }
  return rep;
}

InvariantReport detect_parabola_rotated(const PolyField2D& f) {
  InvariantReport rep;
  if (!check_quadratic_centered(f, rep)) {
    rep.classify();
    return rep;
  }
  QuadCoeffs qc = quad_coeffs(f);
  if (qc.b1.is_zero()) {
    rep.diagnostics.push_back("b1 = 0: the tilt angle is undefined; axis-aligned theorems apply");
    rep.classify();
    return rep;
  }
  if (qc.a2 != qc.b1) {
    rep.diagnostics.push_back("a2 != b1 (" + qc.a2.str() + " vs " + qc.b1.str() +
                              "): rotated-parabola conditions do not apply");
    rep.classify();
    return rep;
  }

  double a1 = qc.a1.to_double(), b1 = qc.b1.to_double(), b2 = qc.b2.to_double();
  double a3 = qc.a3.to_double(), a4 = qc.a4.to_double(), a5 = qc.a5.to_double();
  double b3 = qc.b3.to_double(), b4 = qc.b4.to_double(), b5 = qc.b5.to_double();
  double scale = 0;
  for (double v : {a1, b1, b2, a3, a4, a5, b3, b4, b5}) scale = std::max(scale, std::abs(v));
  scale = std::max(scale, 1.0);

  // (a1 - b2)/b1 = tan(theta) - cot(theta) = -2*cot(2*theta), so the tilt
  // satisfies cot(2*theta) = (b2 - a1)/(2*b1); acot principal value in (0, pi)
  double w = (b2 - a1) / (2.0 * b1);
  double theta0 = 0.5 * ((w == 0) ? M_PI / 2 : (w > 0 ? std::atan(1.0 / w) : std::atan(1.0 / w) + M_PI));

  // try QuadExt reconstruction against radicands seen in the coefficients
  std::vector<long long> bases{2, 3, 5};
  for (const Quad* q : {&qc.a1, &qc.a2, &qc.a3, &qc.a4, &qc.a5, &qc.b1, &qc.b2, &qc.b3, &qc.b4, &qc.b5})
    if (!q->is_rational() && std::find(bases.begin(), bases.end(), q->base()) == bases.end())
      bases.push_back(q->base());

  // tol must sit far below 1/max_den^2, else continued fractions "find" a
  // convergent of an irrational value and the rational branch wins wrongly
  auto snap_quad = [&](double v) -> std::optional<Quad> {
    double tol = 1e-11 * std::max(1.0, std::abs(v));
    if (auto r = snap_rational(v, tol, 10000)) return Quad(*r);
    for (long long d : bases) {
      double root = std::sqrt(static_cast<double>(d));
      if (auto r = snap_rational(v / root, tol, 10000)) return Quad(Rational(0), *r, d);
    }
    return std::nullopt;
  };

  std::vector<std::array<double, 5>> found;
  for (int branch = 0; branch < 4; ++branch) {
    double theta = theta0 + branch * M_PI / 2;
    double st = std::sin(theta), ct = std::cos(theta);
    if (std::abs(ct) < 1e-9 || std::abs(st) < 1e-9) {
      rep.diagnostics.push_back("branch " + std::to_string(branch) +
                                ": axis-aligned angle; skipped");
      continue;
    }
    double tt = st / ct, sec = 1.0 / ct;
    double s2 = std::sin(2 * theta), c2 = std::cos(2 * theta);
    double s3 = std::sin(3 * theta), c3 = std::cos(3 * theta);

    double rhs_a3 = (b3 * sec * (29 * st + s3) - 2 * b4 * s2 + 2 * b5 * (3 + c2)) / 16.0;
    double rhs_a4 = (tt * (b4 * (3 + c2) + tt * (-2 * b5 * st * st + b3 * (3 + c2) * tt))) / 8.0;
    double rhs_a5 =
        (sec * sec * (-4 * b3 * (5 + c2) * st * st - 2 * (-5 * ct + c3) * (b4 * ct + b5 * st))) / 16.0;

    double defect = std::max({std::abs(a3 - rhs_a3), std::abs(a4 - rhs_a4), std::abs(a5 - rhs_a5)});
    if (defect > 1e-10 * scale) {
      rep.diagnostics.push_back("branch " + std::to_string(branch) + " (theta = " +
                                num_str(theta) + "): coefficient constraints fail by " +
                                num_str(defect));
      continue;
    }

    double bracket = b3 * (3 + c2) * (3 + c2) + s2 * (b4 * s2 - b5 * (3 + c2));
    double m1 = sec * bracket / 16.0;
    double m2 = -2.0 * m1 * tt;
    double m3 = m1 * tt * tt;
    double base = -2.0 * (-b1 / tt + b2) + (b2 + b1 * tt);
    double m4 = st * base;
    double m5 = ct * base;

    std::array<double, 5> m{m1, m2, m3, m4, m5};
    double peak = 0;
    for (double v : m) peak = std::max(peak, std::abs(v));
    if (peak < 1e-12 * scale) {
      rep.diagnostics.push_back("branch " + std::to_string(branch) + ": conic degenerates to 0");
      continue;
    }
    for (auto& v : m) v /= peak;
    for (double v : m) {
      if (std::abs(v) > 1e-12) {
        if (v < 0)
          for (auto& vv : m) vv = -vv;
        break;
      }
    }
    if (std::abs(m[0]) < 1e-12 && std::abs(m[1]) < 1e-12 && std::abs(m[2]) < 1e-12) {
      rep.diagnostics.push_back("branch " + std::to_string(branch) +
                                ": quadratic part vanishes (degenerate line)");
      continue;
    }
    bool dup = false;
    for (const auto& prev : found) {
      double diff = 0;
      for (int i = 0; i < 5; ++i) diff = std::max(diff, std::abs(prev[i] - m[i]));
      if (diff < 1e-9) dup = true;
    }
    if (dup) continue;
    found.push_back(m);

    CurveCandidate cc;
    cc.kind = CurveKind::RotatedConic;
    cc.clause = "theta branch " + std::to_string(branch) + " (theta = " + num_str(theta) + ")";
    cc.param_num["theta"] = theta;

    // exact reconstruction attempt
    std::array<std::optional<Quad>, 5> exact;
    bool all_exact = true;
    for (int i = 0; i < 5; ++i) {
      exact[i] = snap_quad(m[i]);
      if (!exact[i]) all_exact = false;
    }
    const char* names[5] = {"m1", "m2", "m3", "m4", "m5"};
    BiPoly g;
    if (all_exact) {
      g = BiPoly::monomial(2, 0, *exact[0]) + BiPoly::monomial(1, 1, *exact[1]) +
          BiPoly::monomial(0, 2, *exact[2]) + BiPoly::monomial(1, 0, *exact[3]) +
          BiPoly::monomial(0, 1, *exact[4]);
      DarbouxResult dr = darboux_check(f, g);
      if (dr.invariant) {
        for (int i = 0; i < 5; ++i) cc.set_param(names[i], *exact[i]);
        cc.g = g;
        cc.cert.exact = true;
        cc.cert.kind = "darboux-cofactor";
        cc.cert.cofactor = dr.cofactor.str();
      } else {
        all_exact = false; // snapped values were wrong; fall through to numeric
      }
    }
    if (!all_exact) {
      for (int i = 0; i < 5; ++i) cc.set_param_numeric(names[i], m[i]);
      // exact division on float-exact coefficients; tiny remainder = numeric certificate
      g = BiPoly();
      int ii[5] = {2, 1, 0, 1, 0}, jj[5] = {0, 1, 2, 0, 1};
      for (int i = 0; i < 5; ++i)
        g = g + BiPoly::monomial(ii[i], jj[i], Quad(rat_from_double(m[i])));
      cc.g = g;
      DarbouxResult dr = darboux_check(f, g);
      double resid = 0;
      if (!dr.invariant)
        for (const auto& [mono, cv] : dr.remainder.terms())
          resid = std::max(resid, std::abs(cv.to_double()));
      cc.cert.exact = dr.invariant;
      cc.cert.kind = dr.invariant ? "darboux-cofactor" : "numeric-residual";
      if (dr.invariant) cc.cert.cofactor = dr.cofactor.str();
      cc.cert.residual = resid;
      if (!dr.invariant && resid > 1e-8 * scale) {
        rep.diagnostics.push_back("branch " + std::to_string(branch) +
                                  ": residual too large (" + num_str(resid) + "); rejected");
        found.pop_back();
        continue;
      }
    }
    std::ostringstream lbl;
    lbl.precision(12);
    auto pstr = [&](int i) {
      return cc.param.count(names[i]) ? cc.param.at(names[i]).str() : num_str(m[i]);
    };
    lbl << pstr(0) << "*x^2 + (" << pstr(1) << ")*xy + (" << pstr(2) << ")*y^2 + ("
        << pstr(3) << ")*x + (" << pstr(4) << ")*y = 0";
    cc.label = lbl.str();
    rep.candidates.push_back(cc);
  }
  rep.classify();
  return rep;
}

} // namespace fracinv::detect
