#include "fracinv/frac/caputo.hpp"

#include "fracinv/frac/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace fracinv::frac {

double caputo_power(double p, double alpha, double t) {
  if (!(alpha > 0) || alpha > 1) throw std::domain_error("caputo_power: alpha must be in (0,1]");
  if (p < 0) throw std::domain_error("caputo_power: power must be nonnegative");
  if (p == 0) return 0.0; // derivative of a constant
  return gamma_fn(p + 1) * rgamma(p + 1 - alpha) * std::pow(t, p - alpha);
}

double frac_integral_power(double p, double alpha, double t) {
  if (!(alpha > 0)) throw std::domain_error("frac_integral_power: alpha must be positive");
  if (p < 0) throw std::domain_error("frac_integral_power: power must be nonnegative");
  return gamma_fn(p + 1) * rgamma(p + 1 + alpha) * std::pow(t, p + alpha);
}

double caputo_poly(const std::vector<double>& c, double alpha, double t) {
  double s = 0;
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k] != 0) s += c[k] * caputo_power(static_cast<double>(k), alpha, t);
  return s;
}

} // namespace fracinv::frac
