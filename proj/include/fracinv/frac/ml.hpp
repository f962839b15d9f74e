#pragma once
#include <complex>
#include <string>

namespace fracinv::frac {

// Mittag-Leffler E_{alpha,beta}(z) with a tiered evaluation strategy:
//   closed forms (alpha = 1; alpha = 1/2 on the real line)
//   -> compensated double Taylor series, accepted only when the cancellation
//      certificate holds (max |term| / |sum| small enough for full accuracy)
//   -> parabolic contour integral with pole residue (alpha <= 1)
//   -> multiprecision Taylor series at 50/120/300 digits.
struct MLResult {
  std::complex<double> value{0, 0};
  std::string method;
  int work = 0;          // series terms or contour nodes
  double err_estimate = 0;
};

MLResult ml_full(std::complex<double> z, double alpha, double beta = 1.0);

std::complex<double> ml(std::complex<double> z, double alpha, double beta = 1.0);

// real argument, real result (throws if the imaginary part fails to cancel)
double ml_real(double x, double alpha, double beta = 1.0);

// d/dx E_alpha(x) = E_{alpha,0}(x) / (alpha x), continued through x = 0
double ml_deriv_real(double x, double alpha);

// scaled complementary error function exp(x^2) erfc(x), safe for large x
double erfcx_fn(double x);

} // namespace fracinv::frac
