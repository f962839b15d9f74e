#include "fracinv/frac/ml_multiprec.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace fracinv::frac {

namespace {

bool pole_argument(double g) {
  double r = std::round(g);
  return g < 0.5 && std::abs(g - r) < 1e-12 * (1 + std::abs(g));
}

template <unsigned Digits>
MpSeriesResult run_series(std::complex<double> z, double alpha, double beta) {
  using R = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>>;

  MpSeriesResult out;
  const R za(z.real()), zb(z.imag());
  R pre(1), pim(0);   // z^k
  R sre(0), sim(0);   // partial sum
  R maxmag(0);

  const double az = std::abs(z);
  // terms start shrinking once k exceeds roughly |z|^(1/alpha)/alpha
  const int k_floor = static_cast<int>(std::ceil(std::pow(2 * az + 1, 1.0 / alpha) / alpha)) + 16;
  const int k_cap = 200000;
  const R tol = boost::math::tools::epsilon<R>() * 16;

  int small_streak = 0;
  int k = 0;
  for (; k < k_cap; ++k) {
    const R g = R(alpha) * k + R(beta);
    const double gd = alpha * k + beta;
    if (!pole_argument(gd)) {
      const R coef = 1 / boost::math::tgamma(g);
      const R tre = pre * coef, tim = pim * coef;
      sre += tre;
      sim += tim;
      const R tmag = sqrt(tre * tre + tim * tim);
      if (tmag > maxmag) maxmag = tmag;
      const R smag = sqrt(sre * sre + sim * sim);
      if (k > k_floor && tmag < tol * (smag + tol)) {
        if (++small_streak >= 4) {
          ++k;
          break;
        }
      } else {
        small_streak = 0;
      }
    }
    const R nre = pre * za - pim * zb;
    pim = pre * zb + pim * za;
    pre = nre;
  }

  out.terms = k;
  out.converged = k < k_cap;
  out.value = {sre.template convert_to<double>(), sim.template convert_to<double>()};
  const R smag = sqrt(sre * sre + sim * sim);
  if (maxmag > 0 && smag > 0)
    out.log10_cancellation =
        (log10(maxmag) - log10(smag)).template convert_to<double>();
  else if (maxmag > 0)
    out.log10_cancellation = 1e300; // sum is exactly zero: full cancellation
  return out;
}

} // namespace

MpSeriesResult ml_series_mp(std::complex<double> z, double alpha, double beta, int digits) {
  if (!(alpha > 0)) throw std::domain_error("ml_series_mp: alpha must be positive");
  if (digits <= 50) return run_series<50>(z, alpha, beta);
  if (digits <= 120) return run_series<120>(z, alpha, beta);
  if (digits <= 300) return run_series<300>(z, alpha, beta);
  throw std::domain_error("ml_series_mp: precision tiers end at 300 digits");
}

} // namespace fracinv::frac
