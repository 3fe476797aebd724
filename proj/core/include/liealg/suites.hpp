#ifndef LIEALG_SUITES_HPP
#define LIEALG_SUITES_HPP

#include "liealg/report.hpp"

#include <string>
#include <vector>

namespace liealg {

/// Named batch suites: whitehead, theorem31, applications, super, oracle.
/// Instances run concurrently up to the jobs bound; record order is fixed
/// by the suite definition, never by completion order.
std::vector<std::string> suite_names();
ReportDocument run_suite(const std::string& name, int jobs = 1);

} // namespace liealg

#endif
