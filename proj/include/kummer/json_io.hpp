#pragma once

#include <string>

#include <json.hpp>

#include "kummer/classify.hpp"
#include "kummer/defectlab.hpp"
#include "kummer/theorems.hpp"

namespace kummer {

// Object keys come out sorted; values of the value group are strings.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const ExtensionReport& r, bool w_normalized = false);
nlohmann::json to_json(const VerificationResult& r);
nlohmann::json to_json(const DefectCertificate& c, bool w_normalized = false);

// MalformedFamily on bad JSON or missing fields.
FamilySpec parse_family(const std::string& text);
FamilySpec load_family(const std::string& path);

}  // namespace kummer
