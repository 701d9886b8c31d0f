#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mixedspectra {

/// Structured outcome of one verifier: an identity or bound name, the two
/// sides where they are scalars, a holds flag, and witness data on failure.
struct TheoremReport {
  std::string name;
  bool applicable = true;
  bool holds = false;
  /// Advisory checks record violations for analysis instead of asserting them;
  /// they never affect exit status.
  bool advisory = false;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::optional<double> slack;  // rhs - lhs where meaningful
  std::string witness;
  std::vector<std::pair<std::string, std::string>> details;

  TheoremReport& detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  TheoremReport& detail(std::string key, const char* value) {
    return detail(std::move(key), std::string(value));
  }
  TheoremReport& detail(std::string key, bool value) {
    return detail(std::move(key), std::string(value ? "true" : "false"));
  }
};

inline TheoremReport inapplicable_report(std::string name, std::string reason) {
  TheoremReport r;
  r.name = std::move(name);
  r.applicable = false;
  r.holds = false;
  r.detail("reason", std::move(reason));
  return r;
}

}  // namespace mixedspectra
