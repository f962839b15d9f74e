#pragma once
#include <array>
#include <functional>
#include <vector>

namespace fracinv::frac {

using RHS2 = std::function<std::array<double, 2>(double, const std::array<double, 2>&)>;

struct Trajectory {
  std::vector<double> t;
  std::vector<std::array<double, 2>> x;
  bool blew_up = false;
  double blowup_time = 0;
};

// Caputo predictor-corrector (fractional trapezoid PECE), alpha in (0,1].
// At alpha = 1 the weights reduce to the classical trapezoid scheme. History
// convolutions run through the deterministic chunked dot kernels.
Trajectory fam_solve(const RHS2& f, std::array<double, 2> x0, double alpha, double t_end,
                     int n_steps, bool parallel = true);

// classical RK4, for integer-order control runs
Trajectory rk4_solve(const RHS2& f, std::array<double, 2> x0, double t_end, int n_steps);

} // namespace fracinv::frac
