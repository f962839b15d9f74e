#include "fracinv/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracinv {

void BiPoly::put(const Mono& m, const Quad& v) {
  if (v.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
  }
}

BiPoly BiPoly::constant(const Quad& v) {
  BiPoly p;
  p.put({0, 0}, v);
  return p;
}

BiPoly BiPoly::monomial(int i, int j, const Quad& v) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  BiPoly p;
  p.put({i, j}, v);
  return p;
}

bool BiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.i == 0 && t_.begin()->first.j == 0);
}

int BiPoly::total_degree() const {
  if (t_.empty()) return -1;
  return t_.begin()->first.i + t_.begin()->first.j; // leading term has max total degree
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.i);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.j);
  return d;
}

Quad BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Quad() : it->second;
}

void BiPoly::set_coeff(int i, int j, const Quad& v) {
  t_.erase({i, j});
  put({i, j}, v);
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [m, c] : t_)
    if (m.i > 0) r.put({m.i - 1, m.j}, c * Quad(m.i));
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (const auto& [m, c] : t_)
    if (m.j > 0) r.put({m.i, m.j - 1}, c * Quad(m.j));
  return r;
}

BiPoly BiPoly::antider_x() const {
  BiPoly r;
  for (const auto& [m, c] : t_) r.put({m.i + 1, m.j}, c / Quad(m.i + 1));
  return r;
}

BiPoly BiPoly::antider_y() const {
  BiPoly r;
  for (const auto& [m, c] : t_) r.put({m.i, m.j + 1}, c / Quad(m.j + 1));
  return r;
}

Quad BiPoly::eval(const Quad& x, const Quad& y) const {
  // term-by-term with cached powers
  std::vector<Quad> xp{Quad(1)}, yp{Quad(1)};
  auto pw = [](std::vector<Quad>& cache, const Quad& base, int k) {
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };
  Quad acc;
  for (const auto& [m, c] : t_) acc += c * pw(xp, x, m.i) * pw(yp, y, m.j);
  return acc;
}

double BiPoly::eval_d(double x, double y) const {
  double acc = 0;
  for (const auto& [m, c] : t_)
    acc += c.to_double() * std::pow(x, m.i) * std::pow(y, m.j);
  return acc;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

BiPoly operator+(const BiPoly& f, const BiPoly& g) {
  BiPoly r = f;
  for (const auto& [m, c] : g.t_) r.put(m, c);
  return r;
}

BiPoly operator-(const BiPoly& f, const BiPoly& g) { return f + (-g); }

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
  BiPoly r;
  for (const auto& [mf, cf] : f.t_)
    for (const auto& [mg, cg] : g.t_) r.put({mf.i + mg.i, mf.j + mg.j}, cf * cg);
  return r;
}

BiPoly BiPoly::operator*(const Quad& s) const {
  BiPoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
  return r;
}

bool operator==(const BiPoly& f, const BiPoly& g) { return (f - g).is_zero(); }

UniPoly BiPoly::substitute_y(const UniPoly& h) const {
  std::vector<UniPoly> hp{UniPoly::constant(Quad(1))};
  auto pw = [&](int k) -> const UniPoly& {
    while (static_cast<int>(hp.size()) <= k) hp.push_back(hp.back() * h);
    return hp[k];
  };
  UniPoly acc;
  for (const auto& [m, c] : t_) acc = acc + UniPoly::monomial(m.i, c) * pw(m.j);
  return acc;
}

UniPoly BiPoly::substitute_x(const UniPoly& h) const {
  std::vector<UniPoly> hp{UniPoly::constant(Quad(1))};
  auto pw = [&](int k) -> const UniPoly& {
    while (static_cast<int>(hp.size()) <= k) hp.push_back(hp.back() * h);
    return hp[k];
  };
  UniPoly acc;
  for (const auto& [m, c] : t_) acc = acc + UniPoly::monomial(m.j, c) * pw(m.i);
  return acc;
}

BiPoly BiPoly::compose_affine(const Quad& ax, const Quad& bx, const Quad& cx,
                              const Quad& ay, const Quad& by, const Quad& cy) const {
  BiPoly X = BiPoly::monomial(1, 0, ax) + BiPoly::monomial(0, 1, bx) + BiPoly::constant(cx);
  BiPoly Y = BiPoly::monomial(1, 0, ay) + BiPoly::monomial(0, 1, by) + BiPoly::constant(cy);
  std::vector<BiPoly> Xp{BiPoly::constant(Quad(1))}, Yp{BiPoly::constant(Quad(1))};
  auto pw = [](std::vector<BiPoly>& cache, const BiPoly& base, int k) -> const BiPoly& {
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };
  BiPoly acc;
  for (const auto& [m, c] : t_) acc = acc + pw(Xp, X, m.i) * pw(Yp, Y, m.j) * c;
  return acc;
}

std::vector<UniPoly> BiPoly::as_poly_in_y() const {
  std::vector<UniPoly> out(static_cast<size_t>(std::max(0, degree_y() + 1)));
  for (const auto& [m, c] : t_) out[m.j].set_coeff(m.i, out[m.j].coeff(m.i) + c);
  return out;
}

BiPoly BiPoly::swap_xy() const {
  BiPoly r;
  for (const auto& [m, c] : t_) r.put({m.j, m.i}, c);
  return r;
}

std::vector<UniPoly> BiPoly::as_poly_in_x() const {
  std::vector<UniPoly> out(static_cast<size_t>(std::max(0, degree_x() + 1)));
  for (const auto& [m, c] : t_) out[m.i].set_coeff(m.j, out[m.i].coeff(m.j) + c);
  return out;
}

bool BiPoly::divide(const BiPoly& f, const BiPoly& g, BiPoly& q, BiPoly& r) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  q = BiPoly();
  r = BiPoly();
  BiPoly work = f;
  const Mono lg = g.t_.begin()->first;
  const Quad lc = g.t_.begin()->second;
  while (!work.is_zero()) {
    const Mono lw = work.t_.begin()->first;
    const Quad cw = work.t_.begin()->second;
    if (lw.i >= lg.i && lw.j >= lg.j) {
      Mono d{lw.i - lg.i, lw.j - lg.j};
      Quad factor = cw / lc;
      BiPoly term = BiPoly::monomial(d.i, d.j, factor);
      q = q + term;
      work = work - term * g;
    } else {
      // move the leading term of work into the remainder
      r.put(lw, cw);
      work.t_.erase(work.t_.begin());
    }
  }
  return r.is_zero();
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : t_) {
    bool mixed = !c.is_rational() && c.rat() != 0;
    std::string cs = c.str();
    bool neg = !mixed && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string vars;
    if (m.i > 0) {
      vars += "x";
      if (m.i > 1) vars += "^" + std::to_string(m.i);
    }
    if (m.j > 0) {
      if (!vars.empty()) vars += "*";
      vars += "y";
      if (m.j > 1) vars += "^" + std::to_string(m.j);
    }
    std::string term;
    if (vars.empty())
      term = mixed ? "(" + cs + ")" : mag;
    else if (mixed)
      term = "(" + cs + ")*" + vars;
    else if (mag == "1")
      term = vars;
    else
      term = mag + "*" + vars;
    if (out.empty())
      out += (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

} // namespace fracinv
