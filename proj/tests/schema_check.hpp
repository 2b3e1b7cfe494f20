#pragma once

// Validator for the subset of JSON Schema used by schema/report.v1.schema.json:
// type, const, enum, required, properties, additionalProperties, items,
// pattern, $ref (local), allOf, anyOf, if/then.

#include <json.hpp>

#include <string>
#include <vector>

namespace schema_check {

/// Empty when `doc` conforms; otherwise one message per violation.
std::vector<std::string> validate(const nlohmann::json& schema, const nlohmann::json& doc);

/// Loads the report schema shipped with the sources.
nlohmann::json report_schema();

} // namespace schema_check
