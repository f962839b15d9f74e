#pragma once

namespace fracinv::frac {

// Gamma(x) for real x (poles give +/-inf per the side convention of tgamma)
double gamma_fn(double x);

// log|Gamma(x)|
double lgamma_fn(double x);

// 1/Gamma(x): exactly 0 at nonpositive integers, underflows smoothly for
// large x instead of overflowing. The Mittag-Leffler series coefficients
// need this form (alpha*k + beta can land on the poles).
double rgamma(double x);

} // namespace fracinv::frac
