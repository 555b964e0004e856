#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace ksph::reports {

using nlohmann::json;

// Every builder returns a report object with at least:
//   command, status ("PASS"/"FAIL"), payload, wall_ms.
// wall_ms is the only nondeterministic field.

json build_report(int sphere, const std::string& export_path = "");
json jacobi_report(int sphere, const std::string& mode, std::uint64_t seed = 0,
                   std::uint64_t count = 1000);
json identify_report(int sphere);
json rep_report(const std::string& rep_case, const std::string& fixtures_dir);
json geometry_report(int sphere, int points = 100, std::uint64_t seed = 0);
json report_all(std::uint64_t seed, const std::string& fixtures_dir);

bool report_passed(const json& r);

// Strips wall_ms fields recursively (for determinism comparisons).
json strip_timing(json r);

}  // namespace ksph::reports
