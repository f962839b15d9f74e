#pragma once
#include "fracinv/quadext.hpp"

#include <complex>
#include <vector>

namespace fracinv {

// Dense univariate polynomial over Quad: c[0] + c[1] X + ... + c[n] X^n.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Quad> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Quad& v);
  static UniPoly monomial(int k, const Quad& v);

  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Quad coeff(int k) const;
  void set_coeff(int k, const Quad& v);
  const std::vector<Quad>& coeffs() const { return c_; }

  UniPoly derivative() const;
  Quad eval(const Quad& x) const;
  double eval_d(double x) const;
  std::complex<double> eval_c(std::complex<double> x) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& f, const UniPoly& g);
  friend UniPoly operator-(const UniPoly& f, const UniPoly& g);
  friend UniPoly operator*(const UniPoly& f, const UniPoly& g);
  UniPoly operator*(const Quad& s) const;
  friend bool operator==(const UniPoly& f, const UniPoly& g) { return f.c_ == g.c_; }

  // exact euclidean division; throws on zero divisor
  static void divmod(const UniPoly& f, const UniPoly& g, UniPoly& q, UniPoly& r);
  // monic exact gcd; gcd(0,0) = 0
  static UniPoly gcd(UniPoly f, UniPoly g);
  UniPoly monic() const;

  std::string str(const char* var = "x") const;

private:
  std::vector<Quad> c_;
  void trim();
};

// Real roots. Exact entries are found via rational-root deflation plus
// quadratic closed forms (rational coefficients), degree-1 solving, and a
// post-hoc snap-and-verify pass; the rest come from a companion matrix with
// Newton polish.
struct RealRoots {
  std::vector<Quad> exact;
  std::vector<double> numeric; // roots not exactly representable
  bool all_exact = true;
  std::vector<double> all() const; // exact+numeric as doubles, sorted
};
RealRoots real_roots(const UniPoly& p);

// numeric complex roots via companion matrix (monic double coefficients)
std::vector<std::complex<double>> complex_roots(const UniPoly& p);

} // namespace fracinv
