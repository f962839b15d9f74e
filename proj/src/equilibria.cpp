#include "fracinv/equilibria.hpp"

#include <algorithm>
#include <cmath>

namespace fracinv {

Eigen::Matrix2d jacobian_at(const PolyField2D& f, double x, double y) {
  Eigen::Matrix2d J;
  J(0, 0) = f.P.dx().eval_d(x, y);
  J(0, 1) = f.P.dy().eval_d(x, y);
  J(1, 0) = f.Q.dx().eval_d(x, y);
  J(1, 1) = f.Q.dy().eval_d(x, y);
  return J;
}

namespace {

constexpr double kResidualTol = 1e-10;
constexpr double kDedupTol = 1e-8;

// Laplace expansion determinant for small matrices over the polynomial ring
UniPoly poly_det(const std::vector<std::vector<UniPoly>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  UniPoly det;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<UniPoly>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<UniPoly> row;
      for (size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    UniPoly term = m[0][c] * poly_det(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

UniPoly sylvester_resultant_y(const std::vector<UniPoly>& pc, const std::vector<UniPoly>& qc) {
  int p = static_cast<int>(pc.size()) - 1;
  int q = static_cast<int>(qc.size()) - 1;
  int n = p + q;
  std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
  for (int r = 0; r < q; ++r)
    for (int k = 0; k <= p; ++k) m[r][r + k] = pc[p - k];
  for (int r = 0; r < p; ++r)
    for (int k = 0; k <= q; ++k) m[q + r][r + k] = qc[q - k];
  return poly_det(m);
}

bool newton_polish(const PolyField2D& f, double& x, double& y, double& residual) {
  for (int it = 0; it < 60; ++it) {
    Eigen::Vector2d v(f.P.eval_d(x, y), f.Q.eval_d(x, y));
    Eigen::Matrix2d J = jacobian_at(f, x, y);
    if (std::abs(J.determinant()) < 1e-14) break;
    Eigen::Vector2d step = J.partialPivLu().solve(v);
    x -= step(0);
    y -= step(1);
    if (step.norm() <= 1e-15 * (1.0 + std::hypot(x, y))) break;
  }
  residual = std::max(std::abs(f.P.eval_d(x, y)), std::abs(f.Q.eval_d(x, y)));
  double scale = 1.0 + std::pow(std::hypot(x, y), 2);
  return residual <= kResidualTol * scale;
}

void add_point(const PolyField2D& f, std::vector<Equilibrium>& pts, double x, double y) {
  double residual = 0;
  if (!newton_polish(f, x, y, residual)) return;
  for (const auto& e : pts)
    if (std::hypot(e.x - x, e.y - y) <= kDedupTol * (1.0 + std::hypot(x, y))) return;
  Equilibrium e;
  e.x = x;
  e.y = y;
  e.jac = jacobian_at(f, x, y);
  e.residual = residual;
  pts.push_back(e);
}

void grid_scan(const PolyField2D& f, std::vector<Equilibrium>& pts) {
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      double x = -10.0 + i, y = -10.0 + j;
      add_point(f, pts, x, y);
    }
}

std::vector<double> candidate_ys(const UniPoly& py) {
  std::vector<double> ys;
  if (py.is_zero()) return ys;
  for (double r : real_roots(py).all()) ys.push_back(r);
  return ys;
}

} // namespace

EquilibriaResult find_equilibria(const PolyField2D& f) {
  EquilibriaResult out;
  if (f.P.is_zero() && f.Q.is_zero()) {
    out.degenerate = true;
    out.note = "zero field: every point is an equilibrium";
    return out;
  }
  if (f.P.is_zero() || f.Q.is_zero()) {
    out.degenerate = true;
    out.note = "one component vanishes identically: equilibria form curves";
    return out;
  }

  if (f.degree() > 2) {
    grid_scan(f, out.points);
    out.note = "grid-seeded Newton (degree > 2)";
    return out;
  }

  auto pc = f.P.as_poly_in_y();
  auto qc = f.Q.as_poly_in_y();
  int degy_p = static_cast<int>(pc.size()) - 1;
  int degy_q = static_cast<int>(qc.size()) - 1;

  if (degy_p == 0 && degy_q == 0) {
    // both depend on x alone; any common root gives a whole vertical line
    UniPoly g = UniPoly::gcd(pc[0], qc[0]);
    if (g.degree() >= 1 && !real_roots(g).all().empty()) {
      out.degenerate = true;
      out.note = "common vertical lines of equilibria";
    }
    return out;
  }

  if (degy_p == 0 || degy_q == 0) {
    // one equation fixes x; solve the other for y
    const UniPoly& xonly = (degy_p == 0) ? pc[0] : qc[0];
    const BiPoly& other = (degy_p == 0) ? f.Q : f.P;
    if (xonly.is_zero()) {
      out.degenerate = true;
      out.note = "one component vanishes identically";
      return out;
    }
    for (double xr : real_roots(xonly).all()) {
      UniPoly slice;
      for (const auto& [m, c] : other.terms())
        slice.set_coeff(m.j, slice.coeff(m.j) + c * Quad(rat_from_double(std::pow(xr, m.i))));
      if (slice.is_zero()) {
        out.degenerate = true;
        out.note = "vertical line of equilibria at x = " + std::to_string(xr);
        continue;
      }
      for (double yr : candidate_ys(slice)) add_point(f, out.points, xr, yr);
    }
    return out;
  }

  UniPoly res = sylvester_resultant_y(pc, qc);
  if (res.is_zero()) {
    out.degenerate = true;
    out.note = "resultant vanishes identically: shared curve of equilibria";
    grid_scan(f, out.points);
    return out;
  }
  for (double xr : real_roots(res).all()) {
    // candidate y values from both slices at x = xr
    auto slice = [&](const BiPoly& p) {
      UniPoly s;
      for (const auto& [m, c] : p.terms())
        s.set_coeff(m.j, s.coeff(m.j) + c * Quad(rat_from_double(std::pow(xr, m.i))));
      return s;
    };
    UniPoly ps = slice(f.P), qs = slice(f.Q);
    std::vector<double> ys;
    for (double y : candidate_ys(ps)) ys.push_back(y);
    for (double y : candidate_ys(qs)) ys.push_back(y);
    if (ps.is_zero() || qs.is_zero()) {
      out.degenerate = true;
      out.note = "vertical line of equilibria at x = " + std::to_string(xr);
    }
    for (double yr : ys) add_point(f, out.points, xr, yr);
  }
  return out;
}

} // namespace fracinv
