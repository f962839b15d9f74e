#pragma once
#include <functional>

namespace fracinv::frac {

// solution of D^alpha x = lambda x + q(t), x(0) = x0, alpha in (0,1]:
//   x(t) = x0 E_alpha(lambda t^alpha)
//        + (1/alpha) \int_0^{t^alpha} E_{alpha,alpha}(lambda s) q(t - s^{1/alpha}) ds
// (the substitution s = (t-tau)^alpha removes the weakly singular kernel)
struct ForcedScalarResult {
  double value = 0;
  double quad_error = 0;
};

ForcedScalarResult solve_scalar_linear(double lambda, const std::function<double(double)>& q,
                                       double x0, double alpha, double t);

} // namespace fracinv::frac
