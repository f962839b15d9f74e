#pragma once
#include "fracinv/detect/candidate.hpp"
#include "fracinv/field.hpp"

namespace fracinv::detect {

// sanity bounds for invariant straight lines of a degree-n field:
//   - at most n distinct parallel lines in any one direction,
//   - at most n+1 distinct directions through any common point,
//   - at most n^2 isolated equilibria.
// Violations flag detector bugs (or a field outside the theorems' scope).
struct BoundReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

BoundReport validate_line_bounds(const PolyField2D& f, const InvariantReport& lines);

} // namespace fracinv::detect
