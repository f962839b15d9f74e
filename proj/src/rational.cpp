#include "fracinv/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace fracinv {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto bad = [&](const char* why) {
    throw std::invalid_argument("bad rational literal '" + s + "': " + why);
  };
  auto check_int = [&](const std::string& part) {
    if (part.empty()) bad("empty integer part");
    size_t k = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (k == part.size()) bad("sign without digits");
    for (; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) bad("non-digit character");
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(BigInt(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  BigInt q(den);
  if (q == 0) bad("zero denominator");
  return Rational(BigInt(num), q);
}

std::string rat_str(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

double rat_double(const Rational& r) { return r.template convert_to<double>(); }

Rational rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp); // x = m * 2^exp, |m| in [0.5,1)
  // 53 bits suffice to make the mantissa integral
  BigInt mant(static_cast<long long>(std::ldexp(m, 53)));
  exp -= 53;
  Rational r(mant);
  if (exp > 0)
    r *= Rational(BigInt(1) << exp);
  else if (exp < 0)
    r /= Rational(BigInt(1) << (-exp));
  return r;
}

std::optional<Rational> snap_rational(double x, double tol, long long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued-fraction convergents h/k of x
  double v = x;
  long long h_prev = 1, k_prev = 0;
  long long h = static_cast<long long>(std::floor(v));
  long long k = 1;
  v -= std::floor(v);
  for (int it = 0; it < 64; ++it) {
    double approx = static_cast<double>(h) / static_cast<double>(k);
    if (std::abs(approx - x) <= tol) return Rational(BigInt(h), BigInt(k));
    if (v < 1e-18) break;
    v = 1.0 / v;
    double a_f = std::floor(v);
    if (a_f > 9e17) break;
    long long a = static_cast<long long>(a_f);
    v -= a_f;
    long long h_next, k_next;
    if (__builtin_mul_overflow(a, h, &h_next) || __builtin_add_overflow(h_next, h_prev, &h_next))
      break;
    if (__builtin_mul_overflow(a, k, &k_next) || __builtin_add_overflow(k_next, k_prev, &k_next))
      break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    if (k > max_den) break;
  }
  return std::nullopt;
}

} // namespace fracinv
