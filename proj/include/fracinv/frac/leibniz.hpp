#pragma once

namespace fracinv::frac {

// How badly the classical product rule fails for Caputo derivatives,
// demonstrated on monomials f = t^p, g = t^q:
//   direct       = D^alpha(t^(p+q))
//   product_rule = t^p D^alpha(t^q) + t^q D^alpha(t^p)
//   defect       = direct - product_rule   (0 when alpha = 1 or a factor is constant)
//   series_sum   = sum_{k=0..min(K,q)} binom(alpha,k) D^(alpha-k)(t^p) (t^q)^(k)
// For p >= 1 the series with K >= q reproduces `direct` exactly (the missing
// terms are the whole obstruction).
struct LeibnizDemo {
  double direct = 0;
  double product_rule = 0;
  double defect = 0;
  double series_sum = 0;
  double series_defect = 0;
};

LeibnizDemo leibniz_obstruction(int p, int q, double alpha, double t, int terms);

} // namespace fracinv::frac
