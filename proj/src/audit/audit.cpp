#include "fracinv/audit/audit.hpp"
#include "fracinv/frac/exact_half.hpp"
#include "fracinv/frac/ml_matrix.hpp"
#include "fracinv/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracinv::audit {
namespace {

bool pure_linear(const PolyField2D& f, Eigen::Matrix2d& A) {
  for (const BiPoly* p : {&f.P, &f.Q})
    for (const auto& [m, c] : p->terms())
      if (m.i + m.j != 1 && !c.is_zero()) return false;
  A(0, 0) = f.P.coeff(1, 0).to_double();
  A(0, 1) = f.P.coeff(0, 1).to_double();
  A(1, 0) = f.Q.coeff(1, 0).to_double();
  A(1, 1) = f.Q.coeff(0, 1).to_double();
  return true;
}

frac::RHS2 field_rhs(const PolyField2D& f) {
  return [&f](double, const std::array<double, 2>& v) { return f.eval_d(v[0], v[1]); };
}

double dist2(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

// endpoint difference between an n-step and an n/2-step run of the same solve
double step_halving_tol(const frac::RHS2& rhs, std::array<double, 2> x0,
                        double alpha, double t_end, int steps) {
  auto fine = frac::fam_solve(rhs, x0, alpha, t_end, steps);
  auto coarse = frac::fam_solve(rhs, x0, alpha, t_end, std::max(1, steps / 2));
  if (fine.blew_up || coarse.blew_up) return std::numeric_limits<double>::infinity();
  return dist2(fine.x.back(), coarse.x.back());
}

// largest horizon (up to t_end) on which the probe trajectory stays finite;
// audits shorten themselves to this so a finite-time blow-up cannot wash out
// the comparison with infinite thresholds
double safe_horizon(const frac::RHS2& rhs, std::array<double, 2> x0, double alpha,
                    double t_end, int steps) {
  auto probe = frac::fam_solve(rhs, x0, alpha, t_end, steps);
  if (!probe.blew_up) return t_end;
  double h = 0.9 * probe.blowup_time;
  if (h <= 0) throw std::runtime_error("trajectory blows up immediately");
  return h;
}

} // namespace

RestartAudit restart_divergence(const PolyField2D& f, std::array<double, 2> x0,
                                double alpha, double t_break, double t_end, int steps) {
  if (!(0 < t_break && t_break < t_end)) throw std::invalid_argument("need 0 < t_break < t_end");
  RestartAudit out;
  out.alpha = alpha;
  out.t_break = t_break;
  out.t_end = t_end;

  Eigen::Matrix2d A;
  if (pure_linear(f, A)) {
    // closed form: no discretization error in the comparison at all
    Eigen::Vector2d v0(x0[0], x0[1]);
    Eigen::Vector2d direct = frac::linear_ml_solution(A, v0, t_end, alpha);
    Eigen::Vector2d mid = frac::linear_ml_solution(A, v0, t_break, alpha);
    Eigen::Vector2d restart = frac::linear_ml_solution(A, mid, t_end - t_break, alpha);
    out.direct_end = {direct[0], direct[1]};
    out.restart_end = {restart[0], restart[1]};
    out.method = "ml-matrix";
    out.solver_tol = 0;
    double scale = std::max({direct.norm(), restart.norm(), 1.0});
    out.threshold = 1e-10 * scale;
  } else {
    auto rhs = field_rhs(f);
    double h = safe_horizon(rhs, x0, alpha, t_end, steps);
    if (h < t_end) {
      t_end = h;
      if (t_break >= t_end) t_break = t_end / 2;
      out.t_break = t_break;
      out.t_end = t_end;
    }
    auto direct = frac::fam_solve(rhs, x0, alpha, t_end, steps);
    int s1 = std::max(1, static_cast<int>(std::lround(steps * t_break / t_end)));
    auto leg1 = frac::fam_solve(rhs, x0, alpha, t_break, s1);
    auto leg2 = frac::fam_solve(rhs, leg1.x.back(), alpha, t_end - t_break,
                                std::max(1, steps - s1));
    if (leg1.blew_up || leg2.blew_up) throw std::runtime_error("restart leg blew up");
    out.direct_end = direct.x.back();
    out.restart_end = leg2.x.back();
    out.method = "pece";
    out.solver_tol = step_halving_tol(rhs, x0, alpha, t_end, steps);
    double scale = std::max({std::hypot(out.direct_end[0], out.direct_end[1]),
                             std::hypot(out.restart_end[0], out.restart_end[1]), 1.0});
    out.threshold = 100 * out.solver_tol + 1e-10 * scale;
  }
  out.divergence = dist2(out.direct_end, out.restart_end);
  out.semigroup_holds = out.divergence <= out.threshold;
  return out;
}

SubspaceAudit subspace_invariance_check(const PolyField2D& f, double A, double B,
                                        double C, std::array<double, 2> x0,
                                        double alpha, double t_end, int steps) {
  double nrm = std::hypot(A, B);
  if (nrm == 0) throw std::invalid_argument("line normal is zero");

  SubspaceAudit out;
  out.alpha = alpha;
  out.on_line_initially = std::abs(A * x0[0] + B * x0[1] + C) <=
                          1e-12 * nrm * (1 + std::abs(x0[0]) + std::abs(x0[1]));

  // exact certificate: snap the raw coefficients (before normalization keeps
  // rational inputs rational) and run the Darboux division.  The certificate
  // is order-independent (the tangency condition for a line does not involve
  // the order), so one check covers every alpha.
  auto ra = snap_rational(A, 1e-9 * nrm, 1000000);
  auto rb = snap_rational(B, 1e-9 * nrm, 1000000);
  auto rc = snap_rational(C, 1e-9 * nrm, 1000000);
  A /= nrm; B /= nrm; C /= nrm;
  if (ra && rb && rc) {
    BiPoly g = BiPoly::var_x() * Quad(*ra) + BiPoly::var_y() * Quad(*rb) +
               BiPoly::constant(Quad(*rc));
    try {
      auto dr = darboux_check(f, g);
      out.algebraic_invariant = dr.invariant;
      out.algebraic_note = dr.invariant ? "exact certificate, cofactor " + dr.cofactor.str()
                                        : "division leaves remainder " + dr.remainder.str();
    } catch (const std::logic_error&) {
      out.algebraic_note = "line polynomial degenerate";
    }
  } else {
    out.algebraic_note = "coefficients not near small rationals; exact check skipped";
  }

  auto rhs = field_rhs(f);
  t_end = safe_horizon(rhs, x0, alpha, t_end, steps);
  auto tr = frac::fam_solve(rhs, x0, alpha, t_end, steps);
  for (size_t i = 0; i < tr.x.size(); ++i) {
    const auto& p = tr.x[i];
    out.max_distance = std::max(out.max_distance, std::abs(A * p[0] + B * p[1] + C));
    out.scale = std::max(out.scale, std::hypot(p[0], p[1]));
  }
  out.final_state = tr.x.back();
  out.solver_tol = step_halving_tol(rhs, x0, alpha, t_end, steps);
  // the discretization reproduces invariant lines to rounding, so the floor
  // term is tiny; the step-halving term dominates for non-invariant lines
  out.threshold = 50 * out.solver_tol + 1e-12 * (1 + out.scale);
  out.stayed = out.max_distance <= out.threshold;
  return out;
}

CurveAudit curve_invariance_check(const PolyField2D& f, const BiPoly& g,
                                  std::array<double, 2> x0, double alpha,
                                  double t_end, int steps) {
  CurveAudit out;
  out.alpha = alpha;
  try {
    out.algebraic_invariant = darboux_check(f, g).invariant;
  } catch (const std::logic_error&) {
    out.algebraic_invariant = false;
  }

  // relative defect: |g(p)| against the sum of its term magnitudes at p, so
  // one threshold works for points of any size
  auto defect = [&g](const std::array<double, 2>& p) {
    double denom = 1;
    for (const auto& [m, c] : g.terms())
      denom += std::abs(c.to_double()) * std::pow(std::abs(p[0]), m.i) *
               std::pow(std::abs(p[1]), m.j);
    return std::abs(g.eval_d(p[0], p[1])) / denom;
  };
  out.on_curve_initially = defect(x0) <= 1e-12;

  auto rhs = field_rhs(f);
  t_end = std::min(safe_horizon(rhs, x0, alpha, t_end, steps),
                   safe_horizon(rhs, x0, 1.0, t_end, steps));
  auto tr = frac::fam_solve(rhs, x0, alpha, t_end, steps);
  for (const auto& p : tr.x) out.max_defect = std::max(out.max_defect, defect(p));
  out.final_state = tr.x.back();

  auto control = frac::fam_solve(rhs, x0, 1.0, t_end, steps);
  for (const auto& p : control.x)
    out.max_defect_classical = std::max(out.max_defect_classical, defect(p));

  out.solver_tol = step_halving_tol(rhs, x0, 1.0, t_end, steps);
  double span = 0;
  for (const auto& p : control.x) span = std::max(span, std::hypot(p[0], p[1]));
  out.threshold = 50 * out.solver_tol / (1 + span) + 1e-12;
  out.stayed = out.max_defect <= out.threshold;
  out.stayed_classical = out.max_defect_classical <= out.threshold;
  return out;
}

ManifoldAudit stable_manifold_audit(double c2, double t_end, int samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  ManifoldAudit out;
  out.coefficient = frac::half_saddle_manifold_coefficient();
  out.c2 = c2;
  out.c1 = -out.coefficient * c2 * c2;
  out.t_end = t_end;
  out.t.reserve(samples);
  out.xy.reserve(samples);

  double y_prev_abs = 0;
  bool monotone = true;
  for (int i = 0; i < samples; ++i) {
    double t = t_end * i / (samples - 1);
    auto p = frac::half_saddle_solution(out.c1, out.c2, t);
    out.t.push_back(t);
    out.xy.push_back(p);
    if (i > 0 && std::abs(p[1]) > y_prev_abs + 1e-300) monotone = false;
    y_prev_abs = std::abs(p[1]);

    double ax = std::abs(p[0]);
    if (i == 0) out.initial_x = ax;
    out.peak_x = std::max(out.peak_x, ax);
    double claim = out.coefficient * p[1] * p[1];
    double dd = std::abs(p[0] + claim) / (ax + claim + 1e-300);
    out.manifold_defect_max = std::max(out.manifold_defect_max, dd);
  }
  out.y_decayed = monotone && std::abs(out.xy.back()[1]) < std::abs(c2);
  out.growth_ratio = out.peak_x / std::max(out.initial_x, 1e-300);
  out.refuted = out.y_decayed && out.growth_ratio > 1e3;
  return out;
}

} // namespace fracinv::audit
