#pragma once
#include "fracinv/rational.hpp"

#include <stdexcept>
#include <string>

namespace fracinv {

struct IncompatibleExtension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact scalar a + b*sqrt(d) with a,b rational and d a squarefree positive
// integer. d == 0 marks a plain rational (b forced to 0). Arithmetic between
// different d is defined only when one side is plain rational.
class Quad {
public:
  Quad() : a_(0), b_(0), d_(0) {}
  Quad(int v) : a_(v), b_(0), d_(0) {}
  Quad(long long v) : a_(v), b_(0), d_(0) {}
  Quad(const Rational& a) : a_(a), b_(0), d_(0) {}
  Quad(const Rational& a, const Rational& b, long long d);

  static Quad sqrt_of(long long d) { return Quad(Rational(0), Rational(1), d); }

  const Rational& rat() const { return a_; }
  const Rational& irr() const { return b_; }
  long long base() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;

  Quad conj() const { return Quad(a_, -b_, d_); }
  double to_double() const;
  std::string str() const;

  Quad operator-() const { return Quad(-a_, -b_, d_); }
  Quad& operator+=(const Quad& o) { return *this = *this + o; }
  Quad& operator-=(const Quad& o) { return *this = *this - o; }
  Quad& operator*=(const Quad& o) { return *this = *this * o; }
  Quad& operator/=(const Quad& o) { return *this = *this / o; }

  friend Quad operator+(const Quad& x, const Quad& y);
  friend Quad operator-(const Quad& x, const Quad& y);
  friend Quad operator*(const Quad& x, const Quad& y);
  friend Quad operator/(const Quad& x, const Quad& y);
  friend bool operator==(const Quad& x, const Quad& y) {
    return (x - y).is_zero();
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
  friend bool operator<(const Quad& x, const Quad& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Quad& x, const Quad& y) { return y < x; }
  friend bool operator<=(const Quad& x, const Quad& y) { return !(y < x); }
  friend bool operator>=(const Quad& x, const Quad& y) { return !(x < y); }

private:
  Rational a_, b_;
  long long d_;
  static long long merge_base(const Quad& x, const Quad& y);
};

std::string quad_str(const Quad& q);

} // namespace fracinv
