#pragma once
#include "fracinv/detect/candidate.hpp"

#include <json.hpp>

namespace fracinv::detect {

nlohmann::json report_json(const InvariantReport& rep);

} // namespace fracinv::detect
