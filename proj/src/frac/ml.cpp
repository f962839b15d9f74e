#include "fracinv/frac/ml.hpp"
#include "fracinv/frac/ml_internal.hpp"

#include "fracinv/frac/gamma.hpp"
#include "fracinv/frac/ml_multiprec.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fracinv::frac {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct SeriesAttempt {
  std::complex<double> value{0, 0};
  double max_term = 0;
  double cancellation = 0; // max |term| / |sum|
  int terms = 0;
  bool converged = false;
  bool certified = false;
};

// compensated Taylor sum with a cancellation certificate
SeriesAttempt series_double(std::complex<double> z, double alpha, double beta) {
  SeriesAttempt out;
  std::complex<double> sum{0, 0}, comp{0, 0}, zp{1, 0};
  const double az = std::abs(z);
  const int k_floor = static_cast<int>(std::ceil(std::pow(2 * az + 1, 1.0 / alpha) / alpha)) + 8;
  const int k_cap = 2000;
  int streak = 0;
  int k = 0;
  for (; k < k_cap; ++k) {
    std::complex<double> t = zp * rgamma(alpha * k + beta);
    // Kahan step
    std::complex<double> y = t - comp;
    std::complex<double> s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    double tm = std::abs(t);
    if (tm > out.max_term) out.max_term = tm;
    if (!std::isfinite(tm) || !std::isfinite(std::abs(sum))) {
      out.value = sum;
      out.terms = k;
      return out; // overflow: not convergent in double
    }
    if (k > k_floor && tm <= std::numeric_limits<double>::epsilon() * std::abs(sum)) {
      if (++streak >= 4) {
        ++k;
        break;
      }
    } else {
      streak = 0;
    }
    zp *= z;
  }
  out.value = sum;
  out.terms = k;
  out.converged = k < k_cap;
  double sm = std::abs(sum);
  out.cancellation = (sm > 0) ? out.max_term / sm : std::numeric_limits<double>::infinity();
  out.certified = out.converged && std::isfinite(sm) && out.cancellation < 1e13;
  return out;
}

// trapezoid over the parabola s(u) = mu (1 + iu)^2; returns the Bromwich-type
// integral (1/2pi i) ∮ e^s s^(alpha-beta) / (s^alpha - z) ds
struct ContourAttempt {
  std::complex<double> value{0, 0};
  int nodes = 0;
  double err = 0;
  bool ok = false;
};

std::complex<double> contour_integrand(double u, double mu, std::complex<double> z,
                                       double alpha, double beta) {
  std::complex<double> iu(1.0, u);
  std::complex<double> s = mu * iu * iu;
  std::complex<double> denom = std::pow(s, alpha) - z;
  // (1/2pi i) * f(s) * ds/du, ds/du = 2 i mu (1+iu)
  return std::exp(s) * std::pow(s, alpha - beta) / denom * (mu / kPi) * iu;
}

ContourAttempt contour_at_mu(double mu, std::complex<double> z, double alpha, double beta,
                             bool pole_inside, std::complex<double> pole) {
  ContourAttempt out;
  const double U = std::sqrt(42.0 / mu); // e^{-mu U^2} ~ 1e-18 truncation
  // keep the pole away from the contour path
  if (pole_inside || std::abs(pole) > 0) {
    double dmin = std::numeric_limits<double>::infinity();
    for (double u = -U; u <= U; u += U / 64) {
      std::complex<double> iu(1.0, u);
      dmin = std::min(dmin, std::abs(mu * iu * iu - pole));
    }
    if (dmin < 0.8) return out; // too close: another mu must be tried
  }

  int n = 32;
  std::complex<double> prev{0, 0};
  bool have_prev = false;
  for (; n <= 16384; n *= 2) {
    double h = 2 * U / n;
    std::complex<double> acc = 0.5 * (contour_integrand(-U, mu, z, alpha, beta) +
                                      contour_integrand(U, mu, z, alpha, beta));
    for (int i = 1; i < n; ++i) acc += contour_integrand(-U + i * h, mu, z, alpha, beta);
    std::complex<double> cur = acc * h;
    if (have_prev) {
      double diff = std::abs(cur - prev);
      if (diff < 5e-14 * (1 + std::abs(cur))) {
        out.value = cur;
        out.nodes = n + 1;
        out.err = diff;
        out.ok = true;
        return out;
      }
    }
    prev = cur;
    have_prev = true;
  }
  return out;
}

ContourAttempt contour_tier(std::complex<double> z, double alpha, double beta) {
  ContourAttempt out;
  bool pole_exists = std::abs(z) > 0 && std::abs(std::arg(z)) < alpha * kPi;
  std::complex<double> pole{0, 0};
  if (pole_exists) pole = std::pow(z, 1.0 / alpha);

  for (double mu : {6.0, 4.0, 8.0, 3.0, 10.0, 2.5}) {
    bool inside = false;
    if (pole_exists) {
      double x = pole.real(), y = pole.imag();
      inside = x > mu - y * y / (4 * mu);
    }
    ContourAttempt at = contour_at_mu(mu, z, alpha, beta, inside, pole);
    if (!at.ok) continue;
    if (inside) {
      std::complex<double> residue = std::exp(pole) * std::pow(pole, 1.0 - beta) / alpha;
      at.value += residue;
    }
    return at;
  }
  return out;
}

} // namespace

StrategyResult ml_strategy_series(std::complex<double> z, double alpha, double beta) {
  SeriesAttempt at = series_double(z, alpha, beta);
  return {at.value, at.converged && at.certified, at.cancellation};
}

StrategyResult ml_strategy_contour(std::complex<double> z, double alpha, double beta) {
  if (alpha > 1) return {};
  ContourAttempt at = contour_tier(z, alpha, beta);
  return {at.value, at.ok, at.err};
}

double erfcx_fn(double x) {
  if (x < 0) return 2 * std::exp(x * x) - erfcx_fn(-x);
  if (x <= 25.0) return std::exp(x * x) * std::erfc(x);
  // asymptotic tail: 1/(x sqrt(pi)) * sum (-1)^m (2m-1)!! / (2x^2)^m
  double inv2x2 = 1.0 / (2 * x * x);
  double term = 1.0, sum = 1.0;
  for (int m = 1; m < 20; ++m) {
    term *= -(2 * m - 1) * inv2x2;
    if (std::abs(term) < 1e-18) break;
    sum += term;
  }
  return sum / (x * std::sqrt(kPi));
}

MLResult ml_full(std::complex<double> z, double alpha, double beta) {
  if (!(alpha > 0)) throw std::domain_error("ml: alpha must be positive");
  MLResult res;

  if (alpha == 1.0 && beta == 1.0) {
    res.value = std::exp(z);
    res.method = "closed-form-exp";
    res.err_estimate = 4 * std::numeric_limits<double>::epsilon() * std::abs(res.value);
    return res;
  }
  if (alpha == 0.5 && beta == 1.0 && z.imag() == 0.0) {
    double x = z.real();
    // E_{1/2}(x) = e^{x^2} erfc(-x)
    double v = (x >= 0) ? (2 * std::exp(x * x) - erfcx_fn(x)) : erfcx_fn(-x);
    res.value = v;
    res.method = "closed-form-erfc";
    res.err_estimate = 8 * std::numeric_limits<double>::epsilon() * std::abs(v);
    return res;
  }

  SeriesAttempt sd = series_double(z, alpha, beta);
  if (sd.certified) {
    res.value = sd.value;
    res.method = "series-double";
    res.work = sd.terms;
    res.err_estimate = sd.cancellation * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(sd.value));
    return res;
  }

  if (alpha <= 1.0) {
    ContourAttempt ct = contour_tier(z, alpha, beta);
    if (ct.ok) {
      res.value = ct.value;
      res.method = "contour";
      res.work = ct.nodes;
      res.err_estimate = ct.err;
      return res;
    }
  }

  // multiprecision rescue; the double attempt bounds the cancellation
  double cancel_digits = 0;
  if (sd.max_term > 0 && std::isfinite(sd.max_term))
    cancel_digits = std::max(0.0, std::log10(sd.max_term) -
                                      std::log10(std::max(std::abs(sd.value), 1e-300)));
  for (int digits : {50, 120, 300}) {
    if (digits < cancel_digits + 20 && digits != 300) continue;
    MpSeriesResult mp = ml_series_mp(z, alpha, beta, digits);
    if (mp.converged && mp.log10_cancellation + 18 <= digits) {
      res.value = mp.value;
      res.method = "series-mp" + std::to_string(digits);
      res.work = mp.terms;
      res.err_estimate = std::pow(10.0, mp.log10_cancellation - digits) *
                         std::max(1.0, std::abs(mp.value));
      return res;
    }
  }
  throw std::runtime_error("ml: no evaluation tier certified the requested point");
}

std::complex<double> ml(std::complex<double> z, double alpha, double beta) {
  return ml_full(z, alpha, beta).value;
}

double ml_real(double x, double alpha, double beta) {
  MLResult r = ml_full({x, 0.0}, alpha, beta);
  double scale = std::max(1.0, std::abs(r.value.real()));
  if (std::abs(r.value.imag()) > 1e-8 * scale)
    throw std::runtime_error("ml_real: nonreal result for a real argument");
  return r.value.real();
}

double ml_deriv_real(double x, double alpha) {
  if (std::abs(x) < 1e-120) return rgamma(alpha + 1.0);
  return ml_real(x, alpha, 0.0) / (alpha * x);
}

} // namespace fracinv::frac
