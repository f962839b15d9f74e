#pragma once
#include "fracinv/field.hpp"

#include <string>
#include <vector>

namespace fracinv::io {

// systems compiled into the binary; name is the data file stem
std::vector<std::string> corpus_names();
bool corpus_has(const std::string& name);
const std::string& corpus_text(const std::string& name); // throws std::out_of_range
PolyField2D corpus_field(const std::string& name);

} // namespace fracinv::io
