#pragma once
#include "fracinv/field.hpp"

#include <Eigen/Dense>
#include <vector>

namespace fracinv {

struct Equilibrium {
  double x = 0, y = 0;
  Eigen::Matrix2d jac = Eigen::Matrix2d::Zero();
  double residual = 0; // max(|P|,|Q|) after polish
  bool saddle() const { return jac.determinant() < 0; }
};

struct EquilibriaResult {
  std::vector<Equilibrium> points; // isolated equilibria found
  bool degenerate = false;         // non-isolated set detected (shared component)
  std::string note;
};

// Resultant elimination for degree <= 2 (exact Sylvester determinant over the
// polynomial ring, then real roots); seeded Newton on a coarse grid otherwise.
EquilibriaResult find_equilibria(const PolyField2D& f);

Eigen::Matrix2d jacobian_at(const PolyField2D& f, double x, double y);

} // namespace fracinv
