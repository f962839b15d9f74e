#include "fracinv/unipoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracinv {

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Quad& v) {
  UniPoly p;
  p.c_ = {v};
  p.trim();
  return p;
}

UniPoly UniPoly::monomial(int k, const Quad& v) {
  UniPoly p;
  p.c_.assign(k + 1, Quad());
  p.c_[k] = v;
  p.trim();
  return p;
}

Quad UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Quad();
  return c_[k];
}

void UniPoly::set_coeff(int k, const Quad& v) {
  if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, Quad());
  c_[k] = v;
  trim();
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Quad> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Quad(static_cast<long long>(k));
  return UniPoly(std::move(d));
}

Quad UniPoly::eval(const Quad& x) const {
  Quad acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPoly::eval_d(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::complex<double> UniPoly::eval_c(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly operator+(const UniPoly& f, const UniPoly& g) {
  std::vector<Quad> c(std::max(f.c_.size(), g.c_.size()), Quad());
  for (size_t k = 0; k < c.size(); ++k) {
    if (k < f.c_.size()) c[k] += f.c_[k];
    if (k < g.c_.size()) c[k] += g.c_[k];
  }
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& f, const UniPoly& g) { return f + (-g); }

UniPoly operator*(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return UniPoly();
  std::vector<Quad> c(f.c_.size() + g.c_.size() - 1, Quad());
  for (size_t i = 0; i < f.c_.size(); ++i)
    for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Quad& s) const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = v * s;
  r.trim();
  return r;
}

void UniPoly::divmod(const UniPoly& f, const UniPoly& g, UniPoly& q, UniPoly& r) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  q = UniPoly();
  r = f;
  const Quad& lead = g.c_.back();
  while (!r.is_zero() && r.degree() >= g.degree()) {
    int shift = r.degree() - g.degree();
    Quad factor = r.c_.back() / lead;
    q.set_coeff(shift, q.coeff(shift) + factor);
    r = r - UniPoly::monomial(shift, factor) * g;
  }
}

UniPoly UniPoly::gcd(UniPoly f, UniPoly g) {
  while (!g.is_zero()) {
    UniPoly q, r;
    divmod(f, g, q, r);
    f = g;
    g = r;
  }
  return f.monic();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Quad(1) / c_.back());
}

std::string UniPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Quad& c = c_[k];
    if (c.is_zero()) continue;
    // two-component values keep their sign inside parentheses
    bool mixed = !c.is_rational() && c.rat() != 0;
    std::string cs = c.str();
    bool neg = !mixed && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string term;
    if (k == 0)
      term = mixed ? "(" + cs + ")" : mag;
    else if (mixed)
      term = "(" + cs + ")*";
    else if (mag != "1")
      term = mag + "*";
    if (k > 0) {
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty())
      out += (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

std::vector<std::complex<double>> complex_roots(const UniPoly& p) {
  int n = p.degree();
  std::vector<std::complex<double>> out;
  if (n < 1) return out;
  double lead = p.coeff(n).to_double();
  if (n == 1) {
    out.push_back(std::complex<double>(-p.coeff(0).to_double() / lead, 0));
    return out;
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.coeff(i).to_double() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

namespace {

// Newton polish of a real root candidate
double polish(const UniPoly& p, double x0) {
  UniPoly dp = p.derivative();
  double x = x0;
  for (int it = 0; it < 40; ++it) {
    double f = p.eval_d(x), df = dp.eval_d(x);
    if (df == 0.0) break;
    double step = f / df;
    x -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
  }
  return x;
}

double coeff_scale(const UniPoly& p) {
  double s = 0;
  for (const auto& c : p.coeffs()) s = std::max(s, std::abs(c.to_double()));
  return s == 0 ? 1.0 : s;
}

// all integer divisors of |n| (n fits in a reasonable size for corpus polys)
std::vector<BigInt> divisors(const BigInt& n0) {
  BigInt n = n0 < 0 ? BigInt(-n0) : n0;
  std::vector<BigInt> out;
  if (n == 0) return out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
    if (d > 100000) break; // cap: large coefficients fall through to numeric
  }
  return out;
}

// exact rational roots of a rational-coefficient polynomial, deflating p as
// they are found (candidates p/q with p | constant, q | leading coefficient
// after clearing denominators)
std::vector<Quad> rational_roots_deflate(UniPoly& p) {
  std::vector<Quad> roots;
  while (p.degree() >= 1) {
    if (p.coeff(0).is_zero()) {
      roots.push_back(Quad(0));
      std::vector<Quad> c(p.coeffs().begin() + 1, p.coeffs().end());
      p = UniPoly(std::move(c));
      continue;
    }
    BigInt lc = 1;
    for (const auto& c : p.coeffs())
      lc = boost::multiprecision::lcm(lc, boost::multiprecision::denominator(c.rat()));
    BigInt c0 = boost::multiprecision::numerator(p.coeff(0).rat() * Rational(lc));
    BigInt cn = boost::multiprecision::numerator(p.coeff(p.degree()).rat() * Rational(lc));
    bool found = false;
    for (const auto& pp : divisors(c0)) {
      for (const auto& qq : divisors(cn)) {
        for (int s = -1; s <= 1 && !found; s += 2) {
          Quad cand((Rational(pp * s, qq)));
          if (p.eval(cand).is_zero()) {
            roots.push_back(cand);
            UniPoly q, r;
            UniPoly::divmod(p, UniPoly(std::vector<Quad>{-cand, Quad(1)}), q, r);
            p = q;
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return roots;
}

} // namespace

std::vector<double> RealRoots::all() const {
  std::vector<double> v;
  for (const auto& q : exact) v.push_back(q.to_double());
  for (double x : numeric) v.push_back(x);
  std::sort(v.begin(), v.end());
  return v;
}

RealRoots real_roots(const UniPoly& p0) {
  RealRoots rr;
  UniPoly p = p0;
  if (p.degree() < 1) return rr; // constants (incl. zero poly) have no isolated roots

  bool rational_coeffs = true;
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) rational_coeffs = false;

  if (p.degree() == 1) {
    rr.exact.push_back(-p.coeff(0) / p.coeff(1)); // exact in any extension
    return rr;
  }

  if (rational_coeffs) {
    auto ratroots = rational_roots_deflate(p);
    rr.exact = std::move(ratroots);
    if (p.degree() == 1) {
      rr.exact.push_back(-p.coeff(0) / p.coeff(1));
      return rr;
    }
    if (p.degree() == 2) {
      // exact quadratic formula via squarefree discriminant core
      Rational a = p.coeff(2).rat(), b = p.coeff(1).rat(), c = p.coeff(0).rat();
      Rational disc = b * b - 4 * a * c;
      if (disc < 0) return rr;
      if (disc == 0) {
        rr.exact.push_back(Quad(-b / (2 * a)));
        return rr;
      }
      // disc = (n/d); sqrt = sqrt(n*d)/d; representable iff n*d squarefree core fits
      BigInt n = boost::multiprecision::numerator(disc);
      BigInt d = boost::multiprecision::denominator(disc);
      BigInt nd = n * d;
      if (nd < BigInt("4000000000000000000")) {
        long long v = nd.template convert_to<long long>();
        Quad root = Quad(Rational(0), Rational(1, d), v); // sqrt(disc)
        rr.exact.push_back((Quad(-b) + root) / Quad(2 * a));
        rr.exact.push_back((Quad(-b) - root) / Quad(2 * a));
        return rr;
      }
    }
    if (p.degree() < 1) return rr;
  }

  // numeric fallback: companion matrix + polish, then snap-and-verify
  double scale = coeff_scale(p);
  auto croots = complex_roots(p);
  std::vector<double> reals;
  for (const auto& z : croots) {
    if (std::abs(z.imag()) > 1e-8 * std::max(1.0, std::abs(z))) continue;
    double x = polish(p, z.real());
    double tol = 1e-8 * scale * std::pow(std::max(1.0, std::abs(x)), p.degree());
    if (std::abs(p.eval_d(x)) > tol) continue;
    reals.push_back(x);
  }
  std::sort(reals.begin(), reals.end());
  reals.erase(std::unique(reals.begin(), reals.end(),
                          [](double a, double b) {
                            return std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a));
                          }),
              reals.end());
  for (double x : reals) {
    // try to promote to an exact root
    bool promoted = false;
    if (auto r = snap_rational(x, 1e-9 * std::max(1.0, std::abs(x)), 1000000)) {
      Quad cand{*r};
      if (p0.eval(cand).is_zero()) {
        bool dup = false;
        for (const auto& e : rr.exact)
          if (e == cand) dup = true;
        if (!dup) rr.exact.push_back(cand);
        promoted = true;
      }
    }
    if (!promoted) {
      bool dup = false;
      for (const auto& e : rr.exact)
        if (std::abs(e.to_double() - x) <= 1e-9 * std::max(1.0, std::abs(x))) dup = true;
      if (!dup) {
        rr.numeric.push_back(x);
        rr.all_exact = false;
      }
    }
  }
  return rr;
}

} // namespace fracinv
