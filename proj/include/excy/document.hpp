#pragma once

#include <json.hpp>

#include "excy/families.hpp"
#include "excy/verify.hpp"

namespace excy::doc {

inline constexpr const char* kSchemaVersion = "1.0";

// JSON document for a family record: every exact integer is a decimal
// string, rationals are "p/q" strings, and decimal approximations appear
// only inside the "approx" sub-object (they are never parsed back).
nlohmann::ordered_json render_json(const families::FamilyRecord& rec);
families::FamilyRecord parse_json(const nlohmann::json& j);

// Plain-text rendering in the X_d in P(a_0,...,a_{n+1}) style.
std::string render_text(const families::FamilyRecord& rec);

std::string equation_string(const hypersurface::WeightedHypersurface& h);

nlohmann::ordered_json report_json(const verify::VerificationReport& report);
std::string report_text(const verify::VerificationReport& report);

nlohmann::ordered_json scan_table_json(int max_dim, std::span<const verify::ScanRow> rows);

}  // namespace excy::doc
