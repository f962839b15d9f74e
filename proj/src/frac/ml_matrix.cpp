#include "fracinv/frac/ml_matrix.hpp"

#include "fracinv/frac/gamma.hpp"
#include "fracinv/frac/ml.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fracinv::frac {

namespace {

using C = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;

// d/dlambda E_{alpha,beta}(lambda h) where h = t^alpha
C ml_param_deriv(C lambda, double h, double alpha, double beta) {
  C w = lambda * h;
  if (std::abs(w) < 1e-120) return h * rgamma(alpha + beta);
  // E'_{alpha,beta}(w) = (E_{alpha,beta-1}(w) - (beta-1) E_{alpha,beta}(w)) / (alpha w)
  C num = ml(w, alpha, beta - 1.0) - (beta - 1.0) * ml(w, alpha, beta);
  return h * num / (alpha * w);
}

} // namespace

Eigen::Matrix2d ml_matrix(const Eigen::Matrix2d& A, double t, double alpha, double beta) {
  if (!(alpha > 0)) throw std::domain_error("ml_matrix: alpha must be positive");
  if (t < 0) throw std::domain_error("ml_matrix: t must be nonnegative");
  const double h = std::pow(t, alpha);

  const double tr = A.trace();
  const double det = A.determinant();
  const double disc = tr * tr / 4 - det;
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());

  C l1, l2;
  if (disc >= 0) {
    double root = std::sqrt(disc);
    l1 = C(tr / 2 + root, 0);
    l2 = C(tr / 2 - root, 0);
  } else {
    double root = std::sqrt(-disc);
    l1 = C(tr / 2, root);
    l2 = C(tr / 2, -root);
  }

  Matrix2c Ac = A.cast<C>();
  Matrix2c I = Matrix2c::Identity();
  Matrix2c G;
  // below the crossover the Hermite form is more accurate than the divided
  // difference (eps/dl beats dl^2 once dl^3 < eps)
  if (std::abs(l1 - l2) > 1e-6 * scale) {
    C f1 = ml(l1 * h, alpha, beta);
    C f2 = ml(l2 * h, alpha, beta);
    G = f1 * (Ac - l2 * I) / (l1 - l2) + f2 * (Ac - l1 * I) / (l2 - l1);
  } else {
    // repeated eigenvalue: Hermite interpolation f(l) I + f'(l) (A - l I)
    C l = (l1 + l2) / 2.0;
    C f = ml(l * h, alpha, beta);
    C fp = ml_param_deriv(l, h, alpha, beta);
    G = f * I + fp * (Ac - l * I);
  }

  double imax = G.imag().cwiseAbs().maxCoeff();
  double rmax = std::max(1.0, G.real().cwiseAbs().maxCoeff());
  if (imax > 1e-7 * rmax)
    throw std::runtime_error("ml_matrix: imaginary residue failed to cancel");
  return G.real();
}

Eigen::Vector2d linear_ml_solution(const Eigen::Matrix2d& A, const Eigen::Vector2d& x0,
                                   double t, double alpha) {
  return ml_matrix(A, t, alpha, 1.0) * x0;
}

} // namespace fracinv::frac
