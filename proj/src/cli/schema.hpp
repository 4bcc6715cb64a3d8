#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace iet::cli {

/// Validator for the draft-07 keywords used by the shipped job schema:
/// type, const, enum, properties, required, additionalProperties (boolean),
/// items, minItems, minLength, minimum, pattern, oneOf, anyOf and local
/// "#/definitions/..." references. Unknown keywords are ignored.
class SchemaValidator {
 public:
  explicit SchemaValidator(nlohmann::json schema);

  /// Empty when `instance` conforms; otherwise one message per violation,
  /// each prefixed with a JSON pointer to the offending value.
  std::vector<std::string> validate(const nlohmann::json& instance) const;

 private:
  void check(const nlohmann::json& schema, const nlohmann::json& value, const std::string& where,
             std::vector<std::string>& errors) const;
  const nlohmann::json& resolve(const nlohmann::json& schema) const;

  nlohmann::json root_;
};

/// The job schema compiled into the binary.
const SchemaValidator& job_schema();

}  // namespace iet::cli
