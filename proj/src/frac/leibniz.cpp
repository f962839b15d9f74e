#include "fracinv/frac/leibniz.hpp"

#include "fracinv/frac/caputo.hpp"
#include "fracinv/frac/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace fracinv::frac {

namespace {

// binom(alpha, k) as a product; no poles for fractional alpha
double frac_binom(double alpha, int k) {
  double b = 1;
  for (int i = 1; i <= k; ++i) b *= (alpha - i + 1) / i;
  return b;
}

} // namespace

LeibnizDemo leibniz_obstruction(int p, int q, double alpha, double t, int terms) {
  if (p < 0 || q < 0) throw std::domain_error("leibniz_obstruction: powers must be >= 0");
  if (terms < 0) throw std::domain_error("leibniz_obstruction: terms must be >= 0");

  LeibnizDemo demo;
  demo.direct = caputo_power(p + q, alpha, t);
  demo.product_rule = std::pow(t, p) * caputo_power(q, alpha, t) +
                      std::pow(t, q) * caputo_power(p, alpha, t);
  demo.defect = demo.direct - demo.product_rule;

  int kmax = std::min(terms, q);
  double sum = 0;
  for (int k = 0; k <= kmax; ++k) {
    // D^(alpha-k) of t^p: the Caputo derivative at k = 0, the (k-alpha)
    // fractional integral beyond (order 0 = identity when alpha = k)
    double dfac;
    if (k == 0)
      dfac = caputo_power(p, alpha, t);
    else if (k - alpha < 1e-15)
      dfac = std::pow(t, p);
    else
      dfac = frac_integral_power(p, k - alpha, t);
    // k-th classical derivative of t^q
    double gfac = gamma_fn(q + 1) * rgamma(q - k + 1) * std::pow(t, q - k);
    sum += frac_binom(alpha, k) * dfac * gfac;
  }
  demo.series_sum = sum;
  demo.series_defect = demo.direct - sum;
  return demo;
}

} // namespace fracinv::frac
