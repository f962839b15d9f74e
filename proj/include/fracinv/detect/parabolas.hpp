#pragma once
#include "fracinv/detect/candidate.hpp"

namespace fracinv::detect {

// y = m x^2 for an origin-centered quadratic field. Clause names follow the
// four-case split of the axis-aligned parabola theorem.
InvariantReport detect_parabola_y_of_x(const PolyField2D& f);

// x = m y^2 (mirror of the above under x <-> y)
InvariantReport detect_parabola_x_of_y(const PolyField2D& f);

// Rotated parabola through the origin: m1 x^2 + m2 xy + m3 y^2 + m4 x + m5 y = 0
// with axis tilted by theta = (1/2) acot((b2 - a1)/b1). Enumerates the four
// theta branches (theta0 + k pi/2), checks the coefficient constraints per
// branch, and normalizes the surviving conics to max |m_i| = 1 with the first
// nonzero coefficient positive.
InvariantReport detect_parabola_rotated(const PolyField2D& f);

} // namespace fracinv::detect
