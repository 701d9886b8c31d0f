#include "mixedspectra/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace mixedspectra {

std::string report_text_line(const TheoremReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(30) << r.name << " applicable=" << (r.applicable ? "true " : "false")
     << " holds=" << (r.holds ? "true " : "false");
  os.precision(10);
  if (r.lhs) os << " lhs=" << *r.lhs;
  if (r.rhs) os << " rhs=" << *r.rhs;
  if (r.slack) os << " slack=" << *r.slack;
  for (const auto& [key, value] : r.details) {
    os << " " << key << "=";
    if (value.find(' ') == std::string::npos) {
      os << value;
    } else {
      os << "\"" << value << "\"";
    }
  }
  if (r.advisory) os << " advisory=true";
  if (!r.witness.empty()) os << " witness=\"" << r.witness << "\"";
  return os.str();
}

nlohmann::ordered_json report_to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["applicable"] = r.applicable;
  j["holds"] = r.holds;
  j["advisory"] = r.advisory;
  j["lhs"] = r.lhs ? nlohmann::ordered_json(*r.lhs) : nlohmann::ordered_json(nullptr);
  j["rhs"] = r.rhs ? nlohmann::ordered_json(*r.rhs) : nlohmann::ordered_json(nullptr);
  j["slack"] = r.slack ? nlohmann::ordered_json(*r.slack) : nlohmann::ordered_json(nullptr);
  j["witness"] = r.witness;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.details) details[key] = value;
  j["details"] = details;
  return j;
}

}  // namespace mixedspectra
