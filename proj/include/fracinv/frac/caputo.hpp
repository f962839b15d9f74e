#pragma once
#include <vector>

namespace fracinv::frac {

// Caputo derivative of t^p for alpha in (0,1]: constants map to 0, p > 0 maps
// to Gamma(p+1)/Gamma(p+1-alpha) t^(p-alpha)
double caputo_power(double p, double alpha, double t);

// Riemann-Liouville integral I^alpha t^p = Gamma(p+1)/Gamma(p+1+alpha) t^(p+alpha)
double frac_integral_power(double p, double alpha, double t);

// termwise Caputo derivative of sum_k c[k] t^k
double caputo_poly(const std::vector<double>& c, double alpha, double t);

} // namespace fracinv::frac
