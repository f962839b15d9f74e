#pragma once
#include "fracinv/detect/candidate.hpp"
#include "fracinv/equilibria.hpp"

namespace fracinv::detect {

// Lines y = m x through the origin (plus the vertical x = 0), for a field of
// arbitrary degree n. Solves the per-degree tangency conditions
// E_k(m) = Q_k(1,m) - m P_k(1,m) = 0, k = 1..n, where P_k, Q_k are the
// homogeneous parts. Requires the origin to be an equilibrium.
InvariantReport detect_lines_origin(const PolyField2D& f);

// Axis-parallel lines anywhere: x = k invariant iff P(k, .) == 0, i.e. every
// y-power coefficient polynomial of P vanishes at k; mirrored for y = l via Q.
InvariantReport detect_lines_axis(const PolyField2D& f);

// Lines through each (exactly rational-representable) equilibrium, obtained by
// exact recentering + the origin detector. Dedupes lines shared by several
// equilibria.
InvariantReport detect_lines_affine(const PolyField2D& f);

// the E_k condition polynomials (exposed for tests and diagnostics)
std::vector<UniPoly> tangency_conditions(const PolyField2D& f);

} // namespace fracinv::detect
