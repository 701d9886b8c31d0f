#pragma once

#include <string>

#include <json.hpp>

#include "mixedspectra/report.hpp"

namespace mixedspectra {

/// One fixed-width text line: name, applicable, holds, then lhs/rhs/slack and
/// detail key=value pairs where present.
std::string report_text_line(const TheoremReport& r);

/// Schema-stable JSON: the keys name, applicable, holds, advisory, lhs, rhs,
/// slack, witness and details are always present (null where absent).
nlohmann::ordered_json report_to_json(const TheoremReport& r);

}  // namespace mixedspectra
