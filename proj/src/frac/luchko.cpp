#include "fracinv/frac/luchko.hpp"

#include "fracinv/frac/ml.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace fracinv::frac {

ForcedScalarResult solve_scalar_linear(double lambda, const std::function<double(double)>& q,
                                       double x0, double alpha, double t) {
  if (!(alpha > 0) || alpha > 1)
    throw std::domain_error("solve_scalar_linear: alpha must be in (0,1]");
  if (t < 0) throw std::domain_error("solve_scalar_linear: t must be nonnegative");

  ForcedScalarResult out;
  if (t == 0) {
    out.value = x0;
    return out;
  }

  double homo = x0 * ml_real(lambda * std::pow(t, alpha), alpha, 1.0);

  auto integrand = [&](double s) {
    double tau = t - std::pow(s, 1.0 / alpha);
    if (tau < 0) tau = 0; // round-off guard at the upper limit
    return ml_real(lambda * s, alpha, alpha) * q(tau);
  };
  double err = 0;
  double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, std::pow(t, alpha), 14, 1e-12, &err);

  out.value = homo + integral / alpha;
  out.quad_error = err / alpha;
  return out;
}

} // namespace fracinv::frac
