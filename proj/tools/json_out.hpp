#pragma once

#include <json.hpp>

#include <string>

namespace selfconv::cli {

using Json = nlohmann::ordered_json;

/// Pretty-prints with two-space indent and every float as %.12e, so
/// dump(parse(dump(j))) == dump(j).
std::string dump(const Json& j);

/// Float formatted the same way dump() prints it.
std::string format_float(double v);

}  // namespace selfconv::cli
