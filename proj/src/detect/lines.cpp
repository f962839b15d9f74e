#include "fracinv/detect/lines.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace fracinv::detect {

namespace {

std::string num_str(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string slope_label(const CurveCandidate& c) {
  if (c.param.count("m")) {
    const Quad& m = c.param.at("m");
    if (m.is_zero()) return "y = 0";
    return "y = " + m.str() + "*x";
  }
  return "y = " + num_str(c.param_num.at("m")) + "*x";
}

// max_k |E_k(m)| as the numeric defect of a slope candidate
double slope_residual(const std::vector<UniPoly>& conds, double m) {
  double r = 0;
  for (const auto& e : conds) r = std::max(r, std::abs(e.eval_d(m)));
  return r;
}

} // namespace

std::vector<UniPoly> tangency_conditions(const PolyField2D& f) {
  int n = std::max(1, f.degree());
  std::vector<UniPoly> E(static_cast<size_t>(n)); // E[k-1] holds degree-k condition
  auto add = [&](const BiPoly& p, bool from_q) {
    for (const auto& [mono, c] : p.terms()) {
      int k = mono.i + mono.j;
      if (k == 0 || k > n) continue;
      int pw = from_q ? mono.j : mono.j + 1;
      Quad cur = E[k - 1].coeff(pw);
      E[k - 1].set_coeff(pw, from_q ? cur + c : cur - c);
    }
  };
  add(f.Q, true);
  add(f.P, false);
  return E;
}

InvariantReport detect_lines_origin(const PolyField2D& f) {
  InvariantReport rep;
  if (f.is_zero()) {
    CurveCandidate c;
    c.kind = CurveKind::LineOrigin;
    c.infinite_family = true;
    c.family_desc = "every line through the origin (zero field)";
    c.clause = "zero field";
    c.cert.exact = true;
    c.cert.kind = "tangency-identity";
    c.cert.detail = "P = Q = 0";
    c.label = "y = m*x for all m; x = 0";
    rep.candidates.push_back(c);
    rep.classify();
    return rep;
  }
  if (!f.P.coeff(0, 0).is_zero() || !f.Q.coeff(0, 0).is_zero()) {
    rep.diagnostics.push_back(
        "origin is not an equilibrium (constant term present); use the affine detector");
    rep.classify();
    return rep;
  }

  auto conds = tangency_conditions(f);
  int n = static_cast<int>(conds.size());

  std::vector<int> vanish, active;
  for (int k = 1; k <= n; ++k)
    (conds[k - 1].is_zero() ? vanish : active).push_back(k);

  // clause bookkeeping; degree-2 case names follow the quadratic theorem
  std::string clause;
  if (n == 2) {
    if (active.empty())
      clause = "case 1(d): every slope";
    else if (vanish == std::vector<int>{1})
      clause = "case 1(a): cubic condition";
    else if (vanish == std::vector<int>{2})
      clause = "case 1(b): quadratic condition";
    else
      clause = "case 1(c): simultaneous conditions";
  } else {
    std::string vs;
    for (int k : vanish) vs += (vs.empty() ? "" : ",") + std::to_string(k);
    clause = active.empty() ? "all tangency conditions vanish"
                            : (vanish.empty() ? "all conditions active"
                                              : "conditions {" + vs + "} vanish identically");
  }

  if (active.empty()) {
    CurveCandidate c;
    c.kind = CurveKind::LineOrigin;
    c.infinite_family = true;
    c.family_desc = "y = m*x for every real m";
    c.clause = clause;
    c.cert.exact = true;
    c.cert.kind = "tangency-identity";
    c.cert.detail = "E_k(m) = 0 identically for k = 1.." + std::to_string(n);
    c.label = "y = m*x for all m";
    rep.candidates.push_back(c);
  } else {
    UniPoly g = conds[active[0] - 1];
    for (size_t i = 1; i < active.size(); ++i) g = UniPoly::gcd(g, conds[active[i] - 1]);
    RealRoots roots = real_roots(g);
    for (const auto& m : roots.exact) {
      // exact double check across every condition
      bool ok = true;
      for (const auto& e : conds)
        if (!e.eval(m).is_zero()) ok = false;
      if (!ok) continue; // gcd root of active set may still fail none (cannot happen), guard
      CurveCandidate c;
      c.kind = CurveKind::LineOrigin;
      c.set_param("m", m);
      c.g = BiPoly::var_y() - BiPoly::monomial(1, 0, m);
      c.clause = clause;
      c.cert = certify_exact(f, c.g);
      c.label = slope_label(c);
      rep.candidates.push_back(c);
    }
    for (double m : roots.numeric) {
      CurveCandidate c;
      c.kind = CurveKind::LineOrigin;
      c.set_param_numeric("m", m);
      c.clause = clause;
      c.cert.exact = false;
      c.cert.kind = "numeric-residual";
      c.cert.residual = slope_residual(conds, m);
      c.cert.detail = "slope is not representable in the coefficient field";
      c.label = slope_label(c);
      rep.candidates.push_back(c);
    }
  }

  // vertical through origin: x = 0 invariant iff P(0, y) == 0 identically
  bool vertical = true;
  for (const auto& [m, c] : f.P.terms())
    if (m.i == 0) vertical = false;
  if (vertical) {
    CurveCandidate c;
    c.kind = CurveKind::LineVertical;
    c.set_param("k", Quad(0));
    c.g = BiPoly::var_x();
    c.clause = "vertical: P(0,y) vanishes identically";
    c.cert = certify_exact(f, c.g);
    c.label = "x = 0";
    rep.candidates.push_back(c);
  }

  rep.classify();
  return rep;
}

namespace {

void axis_candidates(const PolyField2D& f, bool vertical, InvariantReport& rep) {
  // vertical: coefficient polynomials of y^j in P, evaluated in k
  // horizontal: coefficient polynomials of x^i in Q, evaluated in l
  const BiPoly& comp = vertical ? f.P : f.Q;
  // x = k needs, for each power of y, the coefficient polynomial in x
  // (as_poly_in_y yields exactly that); mirrored for y = l
  std::vector<UniPoly> cs = vertical ? comp.as_poly_in_y() : comp.as_poly_in_x();

  const char* axis = vertical ? "x" : "y";
  if (comp.is_zero()) {
    CurveCandidate c;
    c.kind = vertical ? CurveKind::LineVertical : CurveKind::LineHorizontal;
    c.infinite_family = true;
    c.family_desc = std::string("every line ") + axis + " = const";
    c.clause = vertical ? "P vanishes identically" : "Q vanishes identically";
    c.cert.exact = true;
    c.cert.kind = "tangency-identity";
    c.cert.detail = c.clause;
    c.label = std::string(axis) + " = k for all k";
    rep.candidates.push_back(c);
    return;
  }
  UniPoly g;
  bool first = true;
  for (const auto& cj : cs) {
    if (cj.is_zero()) continue;
    g = first ? cj : UniPoly::gcd(g, cj);
    first = false;
  }
  RealRoots roots = real_roots(g);
  for (const auto& k : roots.exact) {
    CurveCandidate c;
    c.kind = vertical ? CurveKind::LineVertical : CurveKind::LineHorizontal;
    c.set_param("k", k);
    c.g = (vertical ? BiPoly::var_x() : BiPoly::var_y()) - BiPoly::constant(k);
    c.clause = vertical ? "P(k,.) vanishes identically" : "Q(.,l) vanishes identically";
    c.cert = certify_exact(f, c.g);
    c.label = std::string(axis) + " = " + k.str();
    rep.candidates.push_back(c);
  }
  for (double k : roots.numeric) {
    double res = 0;
    for (const auto& cj : cs) res = std::max(res, std::abs(cj.eval_d(k)));
    CurveCandidate c;
    c.kind = vertical ? CurveKind::LineVertical : CurveKind::LineHorizontal;
    c.set_param_numeric("k", k);
    c.clause = vertical ? "P(k,.) vanishes identically" : "Q(.,l) vanishes identically";
    c.cert.exact = false;
    c.cert.kind = "numeric-residual";
    c.cert.residual = res;
    c.label = std::string(axis) + " = " + num_str(k);
    rep.candidates.push_back(c);
  }
}

} // namespace

InvariantReport detect_lines_axis(const PolyField2D& f) {
  InvariantReport rep;
  if (f.is_zero()) {
    rep.diagnostics.push_back("zero field: every line is invariant");
    CurveCandidate c;
    c.kind = CurveKind::LineVertical;
    c.infinite_family = true;
    c.family_desc = "every axis-parallel line (zero field)";
    c.clause = "zero field";
    c.cert.exact = true;
    c.cert.kind = "tangency-identity";
    c.label = "x = k, y = l for all k, l";
    rep.candidates.push_back(c);
    rep.classify();
    return rep;
  }
  axis_candidates(f, true, rep);
  axis_candidates(f, false, rep);
  rep.classify();
  return rep;
}

InvariantReport detect_lines_affine(const PolyField2D& f) {
  InvariantReport rep;
  EquilibriaResult eq = find_equilibria(f);
  if (eq.degenerate)
    rep.diagnostics.push_back("equilibrium set is degenerate: " + eq.note);

  std::set<std::string> seen; // canonical line keys for dedup
  for (const auto& e : eq.points) {
    auto sx = snap_rational(e.x, 1e-9 * (1 + std::abs(e.x)), 1000000);
    auto sy = snap_rational(e.y, 1e-9 * (1 + std::abs(e.y)), 1000000);
    std::string ptname = "(" + num_str(e.x) + ", " + num_str(e.y) + ")";
    if (!sx || !sy) {
      rep.diagnostics.push_back("equilibrium " + ptname +
                                " is not rational-representable; skipped");
      continue;
    }
    Quad x0{*sx}, y0{*sy};
    if (!f.P.eval(x0, y0).is_zero() || !f.Q.eval(x0, y0).is_zero()) {
      rep.diagnostics.push_back("equilibrium " + ptname +
                                " failed the exact verification; skipped");
      continue;
    }
    PolyField2D shifted = translate_field(f, x0, y0);
    InvariantReport local = detect_lines_origin(shifted);
    for (const auto& d : local.diagnostics)
      rep.diagnostics.push_back("at " + ptname + ": " + d);
    for (const auto& lc : local.candidates) {
      CurveCandidate c = lc;
      if (lc.infinite_family) {
        c.family_desc = "every line through (" + x0.str() + ", " + y0.str() + ")";
        c.label = c.family_desc;
        c.kind = CurveKind::LineAffine;
        std::string key = "pencil@" + x0.str() + "," + y0.str();
        if (seen.insert(key).second) rep.candidates.push_back(c);
        continue;
      }
      if (lc.kind == CurveKind::LineVertical) {
        c.set_param("k", x0);
        c.g = BiPoly::var_x() - BiPoly::constant(x0);
        c.label = "x = " + x0.str();
        c.cert = certify_exact(f, c.g);
        if (seen.insert("v@" + x0.str()).second) rep.candidates.push_back(c);
        continue;
      }
      c.kind = CurveKind::LineAffine;
      c.set_param("x0", x0);
      c.set_param("y0", y0);
      if (lc.param.count("m")) {
        Quad m = lc.param.at("m");
        Quad icept = y0 - m * x0;
        c.g = BiPoly::var_y() - BiPoly::monomial(1, 0, m) - BiPoly::constant(icept);
        c.cert = certify_exact(f, c.g);
        c.label = "y = " + m.str() + "*x" + (icept.is_zero() ? "" : " + (" + icept.str() + ")");
        std::string key = "m=" + m.str() + ";c=" + icept.str();
        if (seen.insert(key).second) rep.candidates.push_back(c);
      } else {
        double m = lc.param_num.at("m");
        double icept = e.y - m * e.x;
        c.label = "y = " + num_str(m) + "*x + (" + num_str(icept) + ")";
        std::string key = "m~" + num_str(m) + ";c~" + num_str(icept);
        if (seen.insert(key).second) rep.candidates.push_back(c);
      }
    }
  }
  rep.classify();
  return rep;
}

} // namespace fracinv::detect
