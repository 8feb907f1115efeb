#pragma once

#include <string>

#include <json.hpp>

namespace chebcap {

/// Serializes with sorted keys and every floating value at 17 significant
/// digits (nlohmann's own dump prints the shortest round-trip form).
std::string dump_json(const nlohmann::json& value, int indent = 2);

}  // namespace chebcap
