#ifndef DGD_SCHEMA_HPP
#define DGD_SCHEMA_HPP

#include <json.hpp>

#include <string>

namespace dgd {

// Validates a JSON value against the subset of JSON Schema the shipped
// report schema uses: type, properties, required, items, enum,
// additionalProperties (boolean form).
bool validate_json(const nlohmann::json& value, const nlohmann::json& schema,
                   std::string* error);

} // namespace dgd

#endif
