#pragma once

#include <string>

#include "autoconj/ext_real.hpp"
#include "json.hpp"

namespace autoconj {

/// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);

/// Empty cell for +inf.
std::string csv_cell(const ExtReal& v);

/// Number, or the string "inf" for +inf.
nlohmann::json to_json(const ExtReal& v);
ExtReal ext_from_json(const nlohmann::json& j);

}  // namespace autoconj
