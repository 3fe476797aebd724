#ifndef LIEALG_REPORT_HPP
#define LIEALG_REPORT_HPP

#include "json.hpp"

#include <string>
#include <vector>

namespace liealg {

/// One verified claim: what was expected, what came out, and whether they
/// agree. The claim string names the mathematical statement being checked.
struct CheckRecord {
  std::string name;
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ReportDocument {
  std::string instance;
  std::vector<CheckRecord> checks;
  double timing_ms = 0.0;

  bool pass() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

} // namespace liealg

#endif
