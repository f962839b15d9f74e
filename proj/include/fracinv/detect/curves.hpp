#pragma once
#include "fracinv/detect/candidate.hpp"
#include "fracinv/equilibria.hpp"

namespace fracinv::detect {

// y = x^3 + m x^2 + u x through the origin (quadratic fields)
InvariantReport detect_cubic(const PolyField2D& f);

// whole family y = m x^k invariant for every m (k a positive integer)
InvariantReport detect_power_family(const PolyField2D& f);

// whole family y = m e^x invariant for every m
InvariantReport detect_exponential_family(const PolyField2D& f);

// separatrices of divergence-free fields: level sets of the first integral
// through saddle equilibria
InvariantReport detect_separatrix(const PolyField2D& f);

} // namespace fracinv::detect
