#include "fracinv/field.hpp"

namespace fracinv {

QuadCoeffs quad_coeffs(const PolyField2D& f) {
  if (f.degree() > 2) throw std::invalid_argument("field degree exceeds 2");
  QuadCoeffs c;
  c.a0 = f.P.coeff(0, 0);
  c.a1 = f.P.coeff(1, 0);
  c.a2 = f.P.coeff(0, 1);
  c.a3 = f.P.coeff(2, 0);
  c.a4 = f.P.coeff(0, 2);
  c.a5 = f.P.coeff(1, 1);
  c.b0 = f.Q.coeff(0, 0);
  c.b1 = f.Q.coeff(1, 0);
  c.b2 = f.Q.coeff(0, 1);
  c.b3 = f.Q.coeff(2, 0);
  c.b4 = f.Q.coeff(0, 2);
  c.b5 = f.Q.coeff(1, 1);
  return c;
}

BiPoly divergence(const PolyField2D& f) { return f.P.dx() + f.Q.dy(); }

BiPoly hamiltonian(const PolyField2D& f) {
  BiPoly div = divergence(f);
  if (!div.is_zero())
    throw NotHamiltonian("divergence is not zero: " + div.str());
  // H0 = int P dy matches dH/dy = P; the x-correction depends on x alone
  BiPoly H0 = f.P.antider_y();
  BiPoly correction = -f.Q - H0.dx(); // must be a pure function of x
  for (const auto& [m, c] : correction.terms())
    if (m.j != 0)
      throw NotHamiltonian("internal: correction term depends on y"); // unreachable when div == 0
  return H0 + correction.antider_x();
}

UniPoly lie_derivative_y(const PolyField2D& f, const UniPoly& h) {
  return h.derivative() * f.P.substitute_y(h) - f.Q.substitute_y(h);
}

UniPoly lie_derivative_x(const PolyField2D& f, const UniPoly& h) {
  return h.derivative() * f.Q.substitute_x(h) - f.P.substitute_x(h);
}

DarbouxResult darboux_check(const PolyField2D& f, const BiPoly& g) {
  if (g.is_constant()) throw std::invalid_argument("curve polynomial is constant");
  DarbouxResult res;
  res.derivation = g.dx() * f.P + g.dy() * f.Q;
  if (res.derivation.is_zero()) {
    res.invariant = true; // first integral: cofactor 0
    return res;
  }
  BiPoly q, r;
  res.invariant = BiPoly::divide(res.derivation, g, q, r);
  if (res.invariant)
    res.cofactor = q;
  else
    res.remainder = r;
  return res;
}

PolyField2D translate_field(const PolyField2D& f, const Quad& x0, const Quad& y0) {
  // u = x - x0: udot = P(u + x0, v + y0)
  PolyField2D g;
  g.P = f.P.compose_affine(Quad(1), Quad(0), x0, Quad(0), Quad(1), y0);
  g.Q = f.Q.compose_affine(Quad(1), Quad(0), x0, Quad(0), Quad(1), y0);
  return g;
}

PolyField2D rotate_field(const PolyField2D& f, const Quad& c, const Quad& s) {
  if (c * c + s * s != Quad(1))
    throw std::invalid_argument("rotation pair is not on the unit circle");
  // (u,v) = R(x,y), u = c x - s y, v = s x + c y;
  // udot = c P - s Q at (x,y) = (c u + s v, -s u + c v)
  auto back = [&](const BiPoly& p) {
    return p.compose_affine(c, s, Quad(0), -s, c, Quad(0));
  };
  PolyField2D g;
  BiPoly Pb = back(f.P), Qb = back(f.Q);
  g.P = Pb * c - Qb * s;
  g.Q = Pb * s + Qb * c;
  return g;
}

PolyField2D rescale_time(const PolyField2D& f, const Quad& factor) {
  if (factor.sign() <= 0) throw std::invalid_argument("time rescaling must be positive");
  return PolyField2D{f.P * factor, f.Q * factor};
}

} // namespace fracinv
