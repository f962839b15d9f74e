#pragma once
#include "fracinv/field.hpp"
#include "fracinv/frac/fam.hpp"

#include <array>
#include <string>
#include <vector>

namespace fracinv::audit {

// Semigroup / memory probe: integrate 0 -> t_end in one run, then again with a
// state-only restart at t_break (history discarded, clock reset).  The two
// endpoints agree for alpha = 1 and generically split for alpha < 1.
struct RestartAudit {
  double alpha = 1;
  double t_break = 0, t_end = 0;
  std::array<double, 2> direct_end{};
  std::array<double, 2> restart_end{};
  double divergence = 0;   // |direct - restart|
  double solver_tol = 0;   // step-halving error estimate (0 for closed form)
  double threshold = 0;    // divergence at or below this counts as "agrees"
  bool semigroup_holds = false;
  std::string method;      // "ml-matrix" (closed form) or "pece"
};
RestartAudit restart_divergence(const PolyField2D& f, std::array<double, 2> x0,
                                double alpha, double t_break, double t_end,
                                int steps = 4000);

// Does the flow at this order stay on the line A x + B y + C = 0 when started
// on it?  Algebraic certificate (order-independent) plus a measured maximum
// point-line distance along a numerical trajectory.
struct SubspaceAudit {
  double alpha = 1;
  bool algebraic_invariant = false; // exact Darboux certificate for the snapped line
  std::string algebraic_note;
  bool on_line_initially = false;
  double max_distance = 0;   // max over the run of |A x + B y + C| / |(A,B)|
  double scale = 0;          // max |state| seen, for reading max_distance
  double solver_tol = 0;
  double threshold = 0;
  bool stayed = false;
  std::array<double, 2> final_state{};
};
SubspaceAudit subspace_invariance_check(const PolyField2D& f, double A, double B,
                                        double C, std::array<double, 2> x0,
                                        double alpha, double t_end,
                                        int steps = 4000);

// Same probe for an algebraic curve g = 0.  The classical run (alpha = 1,
// same discretization) is the control: a Darboux-invariant curve holds the
// control trajectory, and the fractional run leaving it is then a property
// of the order, not of the solver.
struct CurveAudit {
  double alpha = 1;
  bool algebraic_invariant = false;
  bool on_curve_initially = false;
  double max_defect = 0;           // max |g(x,y)| / (1 + sum |c_m| |x|^i |y|^j)
  double max_defect_classical = 0; // same metric, alpha = 1
  double solver_tol = 0;
  double threshold = 0;
  bool stayed = false;
  bool stayed_classical = false;
  std::array<double, 2> final_state{};
};
CurveAudit curve_invariance_check(const PolyField2D& f, const BiPoly& g,
                                  std::array<double, 2> x0, double alpha,
                                  double t_end, int steps = 4000);

// Half-order saddle D^{1/2}x = x - y^2, D^{1/2}y = -y: start on the claimed
// stable manifold x = -coef y^2 and track the closed-form solution.  |x|
// growing by orders of magnitude while |y| decays refutes the manifold.
struct ManifoldAudit {
  double coefficient = 0; // 4/pi - 1
  double c1 = 0, c2 = 0;  // initial condition (c1 = -coefficient c2^2)
  double t_end = 0;
  std::vector<double> t;
  std::vector<std::array<double, 2>> xy;
  double initial_x = 0, peak_x = 0;
  double growth_ratio = 0;        // peak |x| / initial |x|
  double manifold_defect_max = 0; // max relative |x + coef y^2| along the run
  bool y_decayed = false;
  bool refuted = false; // growth_ratio > 1e3 while y decayed
};
ManifoldAudit stable_manifold_audit(double c2, double t_end = 40, int samples = 81);

} // namespace fracinv::audit
