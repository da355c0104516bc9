#pragma once

// Deterministic JSON layout: objects are indented, arrays of scalars stay on
// one line ("eta_set": [14, 18]), key order is insertion order.

#include <json.hpp>

#include <string>

namespace pinplus::detail {

using Json = nlohmann::ordered_json;

std::string dump_json(const Json& j);

} // namespace pinplus::detail
