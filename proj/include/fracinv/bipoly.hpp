#pragma once
#include "fracinv/unipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace fracinv {

struct Mono {
  int i = 0, j = 0; // x^i y^j
};

// graded lex with x > y, highest first (map iteration starts at the leading term)
struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const {
    int ta = a.i + a.j, tb = b.i + b.j;
    if (ta != tb) return ta > tb;
    return a.i > b.i;
  }
};

// Sparse bivariate polynomial over Quad.
class BiPoly {
public:
  BiPoly() = default;
  static BiPoly constant(const Quad& v);
  static BiPoly monomial(int i, int j, const Quad& v);
  static BiPoly var_x() { return monomial(1, 0, Quad(1)); }
  static BiPoly var_y() { return monomial(0, 1, Quad(1)); }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  int total_degree() const; // -1 for zero
  int degree_x() const;
  int degree_y() const;
  Quad coeff(int i, int j) const;
  void set_coeff(int i, int j, const Quad& v);
  const std::map<Mono, Quad, MonoOrder>& terms() const { return t_; }

  BiPoly dx() const;
  BiPoly dy() const;
  BiPoly antider_x() const; // integration constant 0
  BiPoly antider_y() const;

  Quad eval(const Quad& x, const Quad& y) const;
  double eval_d(double x, double y) const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& f, const BiPoly& g);
  friend BiPoly operator-(const BiPoly& f, const BiPoly& g);
  friend BiPoly operator*(const BiPoly& f, const BiPoly& g);
  BiPoly operator*(const Quad& s) const;
  friend bool operator==(const BiPoly& f, const BiPoly& g);

  // P(x, h(x)) as a polynomial in x
  UniPoly substitute_y(const UniPoly& h) const;
  // P(h(y), y) as a polynomial in y
  UniPoly substitute_x(const UniPoly& h) const;
  // P(ax*x + bx*y + cx, ay*x + by*y + cy)
  BiPoly compose_affine(const Quad& ax, const Quad& bx, const Quad& cx,
                        const Quad& ay, const Quad& by, const Quad& cy) const;

  // coefficients of y^j as polynomials in x (index = j), and vice versa
  std::vector<UniPoly> as_poly_in_y() const;
  std::vector<UniPoly> as_poly_in_x() const;

  BiPoly swap_xy() const; // P(y, x)

  // single-divisor multivariate division f = q*g + r w.r.t. graded lex;
  // no monomial of r is divisible by the leading monomial of g.
  // Returns true when r == 0 (f in the principal ideal <g>).
  static bool divide(const BiPoly& f, const BiPoly& g, BiPoly& q, BiPoly& r);

  std::string str() const;

private:
  std::map<Mono, Quad, MonoOrder> t_;
  void put(const Mono& m, const Quad& v); // accumulate, dropping zeros
};

} // namespace fracinv
