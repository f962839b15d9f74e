#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace fracinv {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" or "p" (optional sign, arbitrary size). Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

// canonical form: "p" when q==1, else "p/q"
std::string rat_str(const Rational& r);

double rat_double(const Rational& r);

// exact conversion of a finite double (binary expansion)
Rational rat_from_double(double x);

// nearest rational with denominator <= max_den via continued fractions;
// nullopt when no convergent lands within tol.
std::optional<Rational> snap_rational(double x, double tol, long long max_den);

} // namespace fracinv
