#pragma once

// Deterministic JSON text: keys sorted, two-space indent, doubles printed
// with 17 significant digits (locale-independent), non-finite doubles as the
// strings "inf", "-inf" and "nan".

#include <string>

#include "json.hpp"

namespace spinorlab {

std::string write_json(const nlohmann::json& value);

/// 17-significant-digit form of a double, e.g. "0.10000000000000001".
std::string format_double(double x);

}  // namespace spinorlab
