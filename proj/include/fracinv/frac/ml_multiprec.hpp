#pragma once
#include <complex>

namespace fracinv::frac {

// Taylor series for E_{alpha,beta}(z) evaluated in multiprecision floats.
// Rescues the regimes where the double series cancels catastrophically
// (alpha < 1 with z on or near the negative axis).
struct MpSeriesResult {
  std::complex<double> value{0, 0};
  double log10_cancellation = 0; // log10(max |term| / |sum|)
  int terms = 0;
  bool converged = false;
};

// digits picks the smallest supported precision tier >= the request
// (50, 120, 300 decimal digits)
MpSeriesResult ml_series_mp(std::complex<double> z, double alpha, double beta, int digits);

} // namespace fracinv::frac
