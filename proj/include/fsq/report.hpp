#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fsq/classifier.hpp"

namespace fsq {

/// Canonical JSON object for a report. Keys are sorted; wall time is only
/// present when include_timing is set.
nlohmann::json report_to_json(const ClassificationReport& r, bool include_timing = false);
ClassificationReport report_from_json(const nlohmann::json& j);

/// One-line canonical JSON.
std::string report_serialize(const ClassificationReport& r, bool include_timing = false);
/// Inverse of report_serialize. Throws InputError on malformed text.
ClassificationReport report_parse(std::string_view text);

/// Short human-readable summary.
std::string report_text(const ClassificationReport& r);

nlohmann::json slope_to_json(const Slope& s);
Slope slope_from_json(const nlohmann::json& j);

/// Header plus one row per (#D, class) and a totals row per class.
std::string census_csv(const CensusResult& c);
/// Summary object: counts per class (plain and orbit-weighted) and per #D.
nlohmann::json census_summary_json(const CensusResult& c);

}  // namespace fsq
