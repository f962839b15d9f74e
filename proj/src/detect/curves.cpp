#include "fracinv/detect/curves.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

namespace fracinv::detect {

namespace {

std::string num_str(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

bool check_quadratic_centered(const PolyField2D& f, InvariantReport& rep, const char* what) {
  if (f.degree() > 2) throw std::invalid_argument("field degree exceeds 2");
  if (!f.P.coeff(0, 0).is_zero() || !f.Q.coeff(0, 0).is_zero()) {
    rep.diagnostics.push_back(std::string("constant terms present; the origin-centered ") +
                              what + " conditions do not apply");
    return false;
  }
  return true;
}

// b/a must be one consistent positive integer across the pairs that define it
std::optional<long long> ratio_as_positive_int(const Quad& b, const Quad& a) {
  Quad r = b / a;
  if (!r.is_rational()) return std::nullopt;
  const Rational& q = r.rat();
  if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
  auto n = boost::multiprecision::numerator(q);
  if (n <= 0 || n > 1000000) return std::nullopt;
  return n.convert_to<long long>();
}

} // namespace

InvariantReport detect_cubic(const PolyField2D& f) {
  InvariantReport rep;
  if (f.is_zero()) {
    CurveCandidate cc;
    cc.kind = CurveKind::CubicGraph;
    cc.infinite_family = true;
    cc.family_desc = "zero field: y = x^3 + m*x^2 + u*x for every m, u";
    cc.cert.exact = true;
    cc.cert.kind = "tangency-identity";
    cc.label = cc.family_desc;
    rep.candidates.push_back(cc);
    rep.classify();
    return rep;
  }
  if (!check_quadratic_centered(f, rep, "cubic")) {
    rep.classify();
    return rep;
  }
  QuadCoeffs c = quad_coeffs(f);

  std::vector<std::string> violated;
  if (!c.a2.is_zero()) violated.push_back("a2 = " + c.a2.str() + " (must be 0)");
  if (!c.a4.is_zero()) violated.push_back("a4 = " + c.a4.str() + " (must be 0)");
  if (!c.a5.is_zero()) violated.push_back("a5 = " + c.a5.str() + " (must be 0)");
  if (!c.b4.is_zero()) violated.push_back("b4 = " + c.b4.str() + " (must be 0)");
  if (c.b5 != c.a3 * Quad(3))
    violated.push_back("b5 = " + c.b5.str() + " != 3*a3 = " + (c.a3 * Quad(3)).str());
  if (!violated.empty()) {
    for (const auto& v : violated) rep.diagnostics.push_back("cubic gate fails: " + v);
    rep.classify();
    return rep;
  }
  if (c.a3.is_zero()) {
    rep.diagnostics.push_back("a3 = 0: the x^3 tangency coefficient cannot pin m");
    rep.classify();
    return rep;
  }
  if (c.a1 == c.b2) {
    rep.diagnostics.push_back("a1 = b2: the linear tangency coefficient cannot pin u");
    rep.classify();
    return rep;
  }
  Quad m = (c.a1 * Quad(3) - c.b2) / c.a3;
  Quad u = c.b1 / (c.a1 - c.b2);
  // remaining x^2 coefficient of the tangency polynomial; the scaled form is
  // (3a1-b2)(2a1-b2)(a1-b2) - 2 a3^2 b1 - a3 b3 (a1-b2)
  Quad residual = m * (c.a1 * Quad(2) - c.b2) - c.a3 * u * Quad(2) - c.b3;
  if (!residual.is_zero()) {
    Quad scalar = residual * c.a3 * (c.a1 - c.b2);
    rep.diagnostics.push_back("obstruction scalar = " + scalar.str() +
                              " (must vanish); x^2 tangency coefficient = " + residual.str());
    rep.classify();
    return rep;
  }
  CurveCandidate cc;
  cc.kind = CurveKind::CubicGraph;
  cc.set_param("m", m);
  cc.set_param("u", u);
  cc.g = BiPoly::var_y() - BiPoly::monomial(3, 0, Quad(1)) - BiPoly::monomial(2, 0, m) -
         BiPoly::monomial(1, 0, u);
  cc.clause = "graph tangency for y = x^3 + m*x^2 + u*x";
  cc.cert = certify_exact(f, cc.g);
  cc.label = "y = x^3 + (" + m.str() + ")*x^2 + (" + u.str() + ")*x";
  rep.candidates.push_back(cc);
  rep.classify();
  return rep;
}

InvariantReport detect_power_family(const PolyField2D& f) {
  InvariantReport rep;
  if (f.is_zero()) {
    CurveCandidate cc;
    cc.kind = CurveKind::PowerCurve;
    cc.infinite_family = true;
    cc.family_desc = "zero field: y = m*x^k for every m and every k";
    cc.cert.exact = true;
    cc.cert.kind = "tangency-identity";
    cc.label = cc.family_desc;
    rep.candidates.push_back(cc);
    rep.classify();
    return rep;
  }
  if (!check_quadratic_centered(f, rep, "power-family")) {
    rep.classify();
    return rep;
  }
  QuadCoeffs c = quad_coeffs(f);

  std::vector<std::string> violated;
  if (!c.b1.is_zero()) violated.push_back("b1 = " + c.b1.str() + " (must be 0)");
  if (!c.b3.is_zero()) violated.push_back("b3 = " + c.b3.str() + " (must be 0)");
  if (!c.a2.is_zero()) violated.push_back("a2 = " + c.a2.str() + " (must be 0)");
  if (!c.a4.is_zero()) violated.push_back("a4 = " + c.a4.str() + " (must be 0)");
  if (!violated.empty()) {
    for (const auto& v : violated) rep.diagnostics.push_back("power-family gate fails: " + v);
    rep.classify();
    return rep;
  }

  // k from b2 = k a1, b5 = k a3, b4 = k a5; zero pairs give no constraint
  struct Pair {
    const Quad *a, *b;
    const char *an, *bn;
  };
  Pair pairs[3] = {{&c.a1, &c.b2, "a1", "b2"},
                   {&c.a3, &c.b5, "a3", "b5"},
                   {&c.a5, &c.b4, "a5", "b4"}};
  std::optional<long long> k;
  for (const auto& pr : pairs) {
    if (pr.a->is_zero()) {
      if (!pr.b->is_zero()) {
        rep.diagnostics.push_back(std::string(pr.bn) + " = " + pr.b->str() + " but " + pr.an +
                                  " = 0: no exponent k satisfies " + pr.bn + " = k*" + pr.an);
        rep.classify();
        return rep;
      }
      continue;
    }
    auto ki = ratio_as_positive_int(*pr.b, *pr.a);
    if (!ki) {
      rep.diagnostics.push_back(std::string(pr.bn) + "/" + pr.an + " = " +
                                (*pr.b / *pr.a).str() + " is not a positive integer");
      rep.classify();
      return rep;
    }
    if (k && *k != *ki) {
      rep.diagnostics.push_back("inconsistent exponents: " + std::string(pr.bn) + "/" + pr.an +
                                " = " + std::to_string(*ki) + " but an earlier pair gave k = " +
                                std::to_string(*k));
      rep.classify();
      return rep;
    }
    k = ki;
  }
  if (!k) {
    rep.diagnostics.push_back("no nonzero coefficient pair pins the exponent k");
    rep.classify();
    return rep;
  }

  CurveCandidate cc;
  cc.kind = CurveKind::PowerCurve;
  cc.infinite_family = true;
  cc.set_param("k", Quad(*k));
  cc.family_desc = "y = m*x^" + std::to_string(*k) + " for every real m";
  cc.clause = "b2 = k*a1, b5 = k*a3, b4 = k*a5 with b1 = b3 = a2 = a4 = 0";
  // the tangency identity holds in m; certify the member m = 1 explicitly
  BiPoly member = BiPoly::var_y() - BiPoly::monomial(static_cast<int>(*k), 0, Quad(1));
  cc.cert = certify_exact(f, member);
  cc.cert.detail = "certified on the member m = 1; the identity is linear in m";
  cc.label = cc.family_desc;
  rep.candidates.push_back(cc);
  if (*k == 1)
    rep.diagnostics.push_back("k = 1: the family is the pencil of lines through the origin");
  rep.classify();
  return rep;
}

InvariantReport detect_exponential_family(const PolyField2D& f) {
  InvariantReport rep;
  if (f.is_zero()) {
    CurveCandidate cc;
    cc.kind = CurveKind::ExpCurve;
    cc.infinite_family = true;
    cc.family_desc = "zero field: y = m*e^x for every m";
    cc.cert.exact = true;
    cc.cert.kind = "tangency-identity";
    cc.label = cc.family_desc;
    rep.candidates.push_back(cc);
    rep.classify();
    return rep;
  }
  if (!check_quadratic_centered(f, rep, "exponential-family")) {
    rep.classify();
    return rep;
  }
  QuadCoeffs c = quad_coeffs(f);

  std::vector<std::string> violated;
  for (auto [v, n] : {std::pair{&c.a3, "a3"}, {&c.a4, "a4"}, {&c.a5, "a5"},
                      {&c.b1, "b1"}, {&c.b2, "b2"}, {&c.b3, "b3"}})
    if (!v->is_zero()) violated.push_back(std::string(n) + " = " + v->str() + " (must be 0)");
  if (c.b4 != c.a2)
    violated.push_back("b4 = " + c.b4.str() + " != a2 = " + c.a2.str());
  if (c.b5 != c.a1)
    violated.push_back("b5 = " + c.b5.str() + " != a1 = " + c.a1.str());
  if (!violated.empty()) {
    for (const auto& v : violated)
      rep.diagnostics.push_back("exponential-family condition fails: " + v);
    rep.classify();
    return rep;
  }

  CurveCandidate cc;
  cc.kind = CurveKind::ExpCurve;
  cc.infinite_family = true;
  cc.family_desc = "y = m*e^x for every real m";
  cc.clause = "b5 = a1, b4 = a2 with a3 = a4 = a5 = b1 = b2 = b3 = 0";
  cc.cert.exact = true;
  cc.cert.kind = "coefficient-identity";
  cc.cert.detail =
      "m*e^x*P(x, m*e^x) - Q(x, m*e^x) vanishes identically once the coefficient "
      "equalities hold (grouped by m^j and the basis x, x^2, e^x, x*e^x, e^2x)";
  // numeric corroboration: sample the defect on a small grid
  double resid = 0;
  for (double m : {-1.0, 0.5, 1.0})
    for (double x = -2.0; x <= 2.0; x += 0.5) {
      double y = m * std::exp(x);
      resid = std::max(resid, std::abs(y * f.P.eval_d(x, y) - f.Q.eval_d(x, y)));
    }
  cc.cert.residual = resid;
  cc.label = cc.family_desc;
  rep.candidates.push_back(cc);
  rep.classify();
  return rep;
}

InvariantReport detect_separatrix(const PolyField2D& f) {
  InvariantReport rep;
  if (f.is_zero()) {
    rep.diagnostics.push_back("zero field: no distinguished separatrix level");
    rep.classify();
    return rep;
  }
  BiPoly H;
  try {
    H = hamiltonian(f);
  } catch (const NotHamiltonian& e) {
    rep.diagnostics.push_back(std::string("no first integral of this form: ") + e.what());
    rep.classify();
    return rep;
  }
  rep.diagnostics.push_back("first integral H = " + H.str() +
                            "; every level set of H is invariant");

  EquilibriaResult eq = find_equilibria(f);
  if (eq.degenerate && !eq.note.empty()) rep.diagnostics.push_back("equilibria: " + eq.note);

  // radicands appearing in the field, for exact snapping of saddle coordinates
  std::vector<long long> bases{2, 3, 5};
  for (const BiPoly* p : {&f.P, &f.Q})
    for (const auto& [mono, cv] : p->terms())
      if (!cv.is_rational() &&
          std::find(bases.begin(), bases.end(), cv.base()) == bases.end())
        bases.push_back(cv.base());
  // tol far below 1/max_den^2, else the rational branch swallows irrational
  // coordinates via a continued-fraction convergent and the root branch starves
  auto snap_scalar = [&](double v) -> std::optional<Quad> {
    double tol = 1e-11 * (1 + std::abs(v));
    if (auto r = snap_rational(v, tol, 10000)) return Quad(*r);
    for (long long d : bases) {
      double root = std::sqrt(static_cast<double>(d));
      if (auto r = snap_rational(v / root, tol, 10000)) return Quad(Rational(0), *r, d);
    }
    return std::nullopt;
  };

  int saddles = 0;
  std::vector<std::string> seen_exact;
  std::vector<double> seen_num;
  for (const auto& p : eq.points) {
    if (!p.saddle()) continue;
    ++saddles;

    std::optional<Quad> qx = snap_scalar(p.x), qy = snap_scalar(p.y);
    bool exact = false;
    Quad level;
    if (qx && qy) {
      try {
        exact = f.P.eval(*qx, *qy).is_zero() && f.Q.eval(*qx, *qy).is_zero();
        if (exact) level = H.eval(*qx, *qy);
      } catch (const IncompatibleExtension&) {
        exact = false;
      }
    }

    CurveCandidate cc;
    cc.kind = CurveKind::LevelSet;
    cc.clause = "level set of the first integral through a saddle";
    if (exact) {
      std::string key = level.str();
      if (std::find(seen_exact.begin(), seen_exact.end(), key) != seen_exact.end()) continue;
      seen_exact.push_back(key);
      cc.set_param("level", level);
      cc.g = H - BiPoly::constant(level);
      cc.cert = certify_exact(f, cc.g);
      cc.cert.detail = "through the saddle (" + qx->str() + ", " + qy->str() + ")";
    } else {
      double lv = H.eval_d(p.x, p.y);
      bool dup = false;
      for (double s : seen_num)
        if (std::abs(s - lv) < 1e-9 * (1 + std::abs(lv))) dup = true;
      if (dup) continue;
      seen_num.push_back(lv);
      cc.set_param_numeric("level", lv);
      cc.g = H - BiPoly::constant(Quad(rat_from_double(lv)));
      cc.cert = certify_exact(f, cc.g); // grad(H - c) . F == 0 identically
      cc.cert.detail = "through the numerically located saddle (" + num_str(p.x) + ", " +
                       num_str(p.y) + ")";
    }
    cc.label = cc.g.str() + " = 0";
    rep.candidates.push_back(cc);
  }
  if (saddles == 0)
    rep.diagnostics.push_back("no saddle equilibria: no separatrix level to report");
  rep.classify();
  return rep;
}

} // namespace fracinv::detect
