#pragma once
#include <Eigen/Dense>

namespace fracinv::frac {

// E_{alpha,beta}(A t^alpha) for real 2x2 A via Lagrange/Hermite interpolation
// on the spectrum (distinct eigenvalues, complex pairs, and the defective
// repeated case are all covered exactly).
Eigen::Matrix2d ml_matrix(const Eigen::Matrix2d& A, double t, double alpha, double beta = 1.0);

// x(t) = E_alpha(A t^alpha) x0: the solution of the linear Caputo system
Eigen::Vector2d linear_ml_solution(const Eigen::Matrix2d& A, const Eigen::Vector2d& x0,
                                   double t, double alpha);

} // namespace fracinv::frac
