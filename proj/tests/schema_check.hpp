#pragma once

// Minimal structural JSON-schema checker for the test suite: supports the
// subset the shipped schemas use (type, required, properties, items, enum).

#include <string>

#include <json.hpp>

namespace qortho::testing {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  return false;
}

inline bool validate_schema(const nlohmann::json& value, const nlohmann::json& schema,
                            std::string* error = nullptr, const std::string& path = "$") {
  auto fail = [&](const std::string& why) {
    if (error) *error = path + ": " + why;
    return false;
  };
  if (schema.contains("type") && !type_matches(value, schema["type"].get<std::string>()))
    return fail("expected type " + schema["type"].get<std::string>());
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& candidate : schema["enum"])
      if (candidate == value) found = true;
    if (!found) return fail("value not in enum");
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return fail("missing required key " + key.get<std::string>());
    if (schema.contains("properties"))
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        if (value.contains(it.key()) &&
            !validate_schema(value[it.key()], it.value(), error, path + "." + it.key()))
          return false;
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i)
      if (!validate_schema(value[i], schema["items"], error,
                           path + "[" + std::to_string(i) + "]"))
        return false;
  }
  return true;
}

}  // namespace qortho::testing
