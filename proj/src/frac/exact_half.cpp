#include "fracinv/frac/exact_half.hpp"

#include "fracinv/frac/ml.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace fracinv::frac {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833411452;

// E_{1/2}(x) for real x through erfc: e^{x^2} erfc(-x)
double e_half(double x) {
  return (x >= 0) ? (2 * std::exp(x * x) - erfcx_fn(x)) : erfcx_fn(-x);
}

// E_{1/2,1/2}(x) = 1/sqrt(pi) + x E_{1/2}(x)
double e_half_half(double x) { return 1.0 / kSqrtPi + x * e_half(x); }

} // namespace

std::array<double, 2> half_saddle_solution(double c1, double c2, double t) {
  if (t < 0) throw std::domain_error("half_saddle_solution: t must be nonnegative");
  double y = c2 * e_half(-std::sqrt(t));
  double x = c1 * e_half(std::sqrt(t));
  if (t > 0 && c2 != 0) {
    // u = sqrt(t-s):  integral becomes 2 \int_0^{sqrt t} E_{1/2,1/2}(u) y1(t-u^2)^2 du
    // with y1(s) = E_{1/2}(-sqrt s) = erfcx(sqrt s)
    auto integrand = [&](double u) {
      double w = erfcx_fn(std::sqrt(std::max(0.0, t - u * u)));
      return 2.0 * e_half_half(u) * w * w;
    };
    double err = 0;
    double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, std::sqrt(t), 14, 1e-12, &err);
    x -= c2 * c2 * integral;
  }
  return {x, y};
}

double half_saddle_manifold_coefficient() {
  // s = v^2 tames the sqrt kernel; e^{-s} (E_{1/2}(-sqrt s))^2 = e^{-s} erfcx(sqrt s)^2
  auto integrand = [](double v) { return 2 * v * std::exp(-v * v) * erfcx_fn(v) * erfcx_fn(v); };
  double err = 0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 12.0, 12,
                                                                       1e-15, &err);
}

} // namespace fracinv::frac
