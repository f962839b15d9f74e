#include "fracinv/quadext.hpp"

#include <cmath>

namespace fracinv {

namespace {
// d = s^2 * core with core squarefree; returns {core, s}
std::pair<long long, long long> squarefree_core(long long d) {
  long long core = 1, s = 1;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e & 1) core *= p;
  }
  core *= d; // leftover prime
  return {core, s};
}
} // namespace

Quad::Quad(const Rational& a, const Rational& b, long long d) : a_(a), b_(b), d_(d) {
  if (d < 0) throw std::invalid_argument("negative radicand");
  if (b_ == 0 || d_ == 0) {
    if (d_ == 1) a_ += b_;
    b_ = 0;
    d_ = 0;
    return;
  }
  auto [core, s] = squarefree_core(d_);
  if (core == 1) { // perfect square: fold into the rational part
    a_ += b_ * s;
    b_ = 0;
    d_ = 0;
    return;
  }
  b_ *= s;
  d_ = core;
}

long long Quad::merge_base(const Quad& x, const Quad& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0) return x.d_;
  if (x.d_ != y.d_)
    throw IncompatibleExtension("mixed radicands sqrt(" + std::to_string(x.d_) +
                                ") and sqrt(" + std::to_string(y.d_) + ")");
  return x.d_;
}

Quad operator+(const Quad& x, const Quad& y) {
  long long d = Quad::merge_base(x, y);
  return Quad(x.a_ + y.a_, x.b_ + y.b_, d);
}

Quad operator-(const Quad& x, const Quad& y) {
  long long d = Quad::merge_base(x, y);
  return Quad(x.a_ - y.a_, x.b_ - y.b_, d);
}

Quad operator*(const Quad& x, const Quad& y) {
  long long d = Quad::merge_base(x, y);
  // (a1 + b1 r)(a2 + b2 r) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) r
  return Quad(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + y.a_ * x.b_, d);
}

Quad operator/(const Quad& x, const Quad& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  long long d = Quad::merge_base(x, y);
  // multiply by conjugate; norm a^2 - b^2 d is nonzero for d squarefree
  Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
  Quad num = x * Quad(y.a_, -y.b_, d);
  return Quad(num.a_ / norm, num.b_ / norm, d);
}

int Quad::sign() const {
  int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d
  Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
  int cmp = lhs.compare(rhs);
  if (cmp == 0) return 0; // cannot happen for squarefree d>1, kept for safety
  return (cmp > 0) ? sa : sb;
}

double Quad::to_double() const {
  double v = rat_double(a_);
  if (d_ != 0) v += rat_double(b_) * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string Quad::str() const {
  if (d_ == 0) return rat_str(a_);
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string irr_part;
  if (b_ == 1)
    irr_part = root;
  else if (b_ == -1)
    irr_part = "-" + root;
  else
    irr_part = rat_str(b_) + "*" + root;
  if (a_ == 0) return irr_part;
  if (b_ > 0) return rat_str(a_) + "+" + irr_part;
  return rat_str(a_) + irr_part; // irr_part carries its minus sign
}

std::string quad_str(const Quad& q) { return q.str(); }

} // namespace fracinv
