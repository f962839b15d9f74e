#pragma once
#include "fracinv/field.hpp"

#include <stdexcept>
#include <string>

namespace fracinv::io {

// parse/shape failures carry a JSON-pointer-style path to the offending node
struct SystemParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// schema: {"degree": n, "a": {"i,j": coeff, ...}, "b": {...}} where coeff is
// "p/q" or {"rat": "p/q", "irr": "r/s", "d": 2}
PolyField2D parse_system_json(const std::string& text);
PolyField2D load_system_file(const std::string& path);

// canonical serialization; re-parses to an identical field
std::string system_to_json(const PolyField2D& f);

// bare polynomial in the same coefficient-map format: {"i,j": coeff, ...}
BiPoly parse_poly_json(const std::string& text);
std::string poly_to_json(const BiPoly& p);

} // namespace fracinv::io
