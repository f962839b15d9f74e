#include "fracinv/frac/gamma.hpp"

#include <cmath>
#include <limits>

namespace fracinv::frac {

namespace {

// factorials up to 20! fit a double exactly
const double kFact[21] = {1.0,
                          1.0,
                          2.0,
                          6.0,
                          24.0,
                          120.0,
                          720.0,
                          5040.0,
                          40320.0,
                          362880.0,
                          3628800.0,
                          39916800.0,
                          479001600.0,
                          6227020800.0,
                          87178291200.0,
                          1307674368000.0,
                          20922789888000.0,
                          355687428096000.0,
                          6402373705728000.0,
                          121645100408832000.0,
                          2432902008176640000.0};

bool near_int(double x, double& rounded) {
  rounded = std::round(x);
  return std::abs(x - rounded) < 1e-12 * (1 + std::abs(x));
}

} // namespace

double gamma_fn(double x) {
  double r;
  if (near_int(x, r) && r >= 1 && r <= 21) return kFact[static_cast<int>(r) - 1];
  return std::tgamma(x);
}

double lgamma_fn(double x) { return std::lgamma(x); }

double rgamma(double x) {
  double r;
  if (x <= 0 && near_int(x, r)) return 0.0;
  if (x > 171.0) return 0.0; // Gamma overflows; the reciprocal underflows to 0
  if (x >= 0.5 || x < -170.0) {
    // moderate magnitudes: direct division is accurate
    double g = gamma_fn(x);
    if (std::isinf(g)) return 0.0;
    if (g != 0.0 && std::isfinite(g)) return 1.0 / g;
  }
  // reflection-safe route: sign(Gamma) * exp(-log|Gamma|)
  double lg = std::lgamma(x);
  double sign = 1.0;
  if (x < 0) {
    // Gamma is negative on (-1,0), positive on (-2,-1), alternating onward
    long long k = static_cast<long long>(std::floor(x));
    sign = (k % 2 == 0) ? 1.0 : -1.0;
  }
  return sign * std::exp(-lg);
}

} // namespace fracinv::frac
