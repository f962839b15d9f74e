#pragma once
#include <array>

namespace fracinv::frac {

// closed-form solution of the half-order saddle model
//   D^{1/2} x = x - y^2,  D^{1/2} y = -y,  (x(0), y(0)) = (c1, c2):
//   y(t) = c2 E_{1/2}(-sqrt t)
//   x(t) = c1 E_{1/2}(sqrt t)
//        - c2^2 \int_0^t (t-s)^{-1/2} E_{1/2,1/2}(sqrt(t-s)) (E_{1/2}(-sqrt s))^2 ds
// evaluated through erfcx identities plus the substitution u = sqrt(t-s).
std::array<double, 2> half_saddle_solution(double c1, double c2, double t);

// K = \int_0^infty e^{-s} (E_{1/2}(-sqrt s))^2 ds = 4/pi - 1: the coefficient
// of the claimed quadratic manifold x = -K y^2 for the model above
double half_saddle_manifold_coefficient();

} // namespace fracinv::frac
