#pragma once
#include <complex>

namespace fracinv::frac {

// the individual evaluation strategies behind ml_full, exposed so they can be
// cross-validated against each other on arguments where both apply
struct StrategyResult {
  std::complex<double> value{0, 0};
  bool usable = false;
  double quality = 0; // series: cancellation factor; contour: doubling error
};
StrategyResult ml_strategy_series(std::complex<double> z, double alpha, double beta);
StrategyResult ml_strategy_contour(std::complex<double> z, double alpha, double beta);

} // namespace fracinv::frac
