#pragma once

#include <json.hpp>
#include <string>

#include "genergy/bounds.hpp"
#include "genergy/enumerate.hpp"

namespace genergy {

/// Fixed 10-decimal rendering shared by every output format, so JSON and CSV
/// carry identical numeric values.
std::string fmt10(double x);

/// Same value the 10-decimal rendering denotes, as a double for JSON.
double round10(double x);

nlohmann::json report_to_json(const BoundReport& r);
std::string report_to_text(const BoundReport& r);
std::string report_to_csv(const BoundReport& r);

nlohmann::json summary_to_json(const EnumerationSummary& s);
std::string summary_to_text(const EnumerationSummary& s);
std::string summary_to_csv(const EnumerationSummary& s);

}  // namespace genergy
