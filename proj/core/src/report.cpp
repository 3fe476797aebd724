#include "liealg/report.hpp"

#include <sstream>

namespace liealg {

bool ReportDocument::pass() const {
  for (const auto& check : checks) {
    if (!check.pass) {
      return false;
    }
  }
  return true;
}

nlohmann::json ReportDocument::to_json() const {
  nlohmann::json doc;
  doc["instance"] = instance;
  doc["checks"] = nlohmann::json::array();
  for (const auto& check : checks) {
    doc["checks"].push_back({{"name", check.name},
                             {"claim", check.claim},
                             {"expected", check.expected},
                             {"computed", check.computed},
                             {"pass", check.pass}});
  }
  doc["pass"] = pass();
  doc["timing_ms"] = timing_ms;
  return doc;
}

std::string ReportDocument::to_text() const {
  std::ostringstream out;
  out << instance << "\n";
  for (const auto& check : checks) {
    out << "  [" << (check.pass ? "pass" : "FAIL") << "] " << check.name << ": expected "
        << check.expected << ", got " << check.computed;
    if (!check.claim.empty()) {
      out << "  (" << check.claim << ")";
    }
    out << "\n";
  }
  out << (pass() ? "PASS" : "FAIL") << " (" << timing_ms << " ms)\n";
  return out.str();
}

} // namespace liealg
