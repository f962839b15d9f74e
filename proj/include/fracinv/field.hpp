#pragma once
#include "fracinv/bipoly.hpp"

#include <array>
#include <stdexcept>

namespace fracinv {

struct NotHamiltonian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// planar polynomial field xdot = P(x,y), ydot = Q(x,y)
struct PolyField2D {
  BiPoly P, Q;
  int degree() const { return std::max(P.total_degree(), Q.total_degree()); }
  bool is_zero() const { return P.is_zero() && Q.is_zero(); }
  std::array<double, 2> eval_d(double x, double y) const {
    return {P.eval_d(x, y), Q.eval_d(x, y)};
  }
};

// quadratic-system coefficient names used throughout the detectors:
// xdot = a1 x + a2 y + a3 x^2 + a4 y^2 + a5 xy
// ydot = b1 x + b2 y + b3 x^2 + b4 y^2 + b5 xy
struct QuadCoeffs {
  Quad a1, a2, a3, a4, a5;
  Quad b1, b2, b3, b4, b5;
  Quad a0, b0; // constant terms (zero for the origin-centered theorems)
};
QuadCoeffs quad_coeffs(const PolyField2D& f); // throws if degree > 2

BiPoly divergence(const PolyField2D& f);

// exact first integral H with dH/dy = P, dH/dx = -Q, H(0,0)=0;
// throws NotHamiltonian (with the offending divergence) when div != 0
BiPoly hamiltonian(const PolyField2D& f);

// tangency defect for the graph y = h(x):  h'(x) P(x,h(x)) - Q(x,h(x))
UniPoly lie_derivative_y(const PolyField2D& f, const UniPoly& h);
// tangency defect for the graph x = h(y):  h'(y) Q(h(y),y) - P(h(y),y)
UniPoly lie_derivative_x(const PolyField2D& f, const UniPoly& h);

// Darboux invariance: g invariant iff grad(g) . F = K g for polynomial K.
// Decided by exact division of the derivation by g.
struct DarbouxResult {
  bool invariant = false;
  BiPoly cofactor;  // K when invariant
  BiPoly remainder; // nonzero witness otherwise
  BiPoly derivation; // g_x P + g_y Q
};
DarbouxResult darboux_check(const PolyField2D& f, const BiPoly& g); // throws on constant g

PolyField2D translate_field(const PolyField2D& f, const Quad& x0, const Quad& y0);
// coordinates rotated by the angle with cos = c, sin = s (c^2 + s^2 must be 1)
PolyField2D rotate_field(const PolyField2D& f, const Quad& c, const Quad& s);
PolyField2D rescale_time(const PolyField2D& f, const Quad& factor); // factor > 0

} // namespace fracinv
