#include "cli/schema.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

#include "iet/cli/schema_text.hpp"

namespace iet::cli {

using nlohmann::json;

SchemaValidator::SchemaValidator(json schema) : root_(std::move(schema)) {}

std::vector<std::string> SchemaValidator::validate(const json& instance) const {
  std::vector<std::string> errors;
  check(root_, instance, "", errors);
  return errors;
}

const json& SchemaValidator::resolve(const json& schema) const {
  const json* current = &schema;
  while (current->is_object() && current->contains("$ref")) {
    const std::string ref = (*current)["$ref"];
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
    current = &root_.at("definitions").at(ref.substr(prefix.size()));
  }
  return *current;
}

namespace {

bool has_type(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  return false;
}

}  // namespace

void SchemaValidator::check(const json& raw_schema, const json& value, const std::string& where,
                            std::vector<std::string>& errors) const {
  const json& schema = resolve(raw_schema);
  const std::string here = where.empty() ? "/" : where;

  if (auto it = schema.find("type"); it != schema.end()) {
    bool ok = false;
    if (it->is_string()) {
      ok = has_type(value, *it);
    } else {
      for (const auto& t : *it) ok = ok || has_type(value, t);
    }
    if (!ok) {
      errors.push_back(here + ": expected type " + it->dump());
      return;
    }
  }
  if (auto it = schema.find("const"); it != schema.end() && value != *it) {
    errors.push_back(here + ": must equal " + it->dump());
  }
  if (auto it = schema.find("enum"); it != schema.end()) {
    bool found = false;
    for (const auto& option : *it) found = found || option == value;
    if (!found) errors.push_back(here + ": must be one of " + it->dump());
  }
  if (value.is_number()) {
    if (auto it = schema.find("minimum"); it != schema.end() && value.get<double>() < it->get<double>()) {
      errors.push_back(here + ": must be >= " + it->dump());
    }
  }
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (auto it = schema.find("minLength"); it != schema.end() && s.size() < it->get<std::size_t>()) {
      errors.push_back(here + ": shorter than " + it->dump());
    }
    if (auto it = schema.find("pattern"); it != schema.end() && !std::regex_search(s, std::regex(it->get<std::string>()))) {
      errors.push_back(here + ": '" + s + "' does not match " + it->dump());
    }
  }
  if (value.is_array()) {
    if (auto it = schema.find("minItems"); it != schema.end() && value.size() < it->get<std::size_t>()) {
      errors.push_back(here + ": needs at least " + it->dump() + " items");
    }
    if (auto it = schema.find("items"); it != schema.end()) {
      for (std::size_t i = 0; i < value.size(); ++i) check(*it, value[i], where + "/" + std::to_string(i), errors);
    }
  }
  if (value.is_object()) {
    const json empty = json::object();
    const json& props = schema.contains("properties") ? schema["properties"] : empty;
    if (auto it = schema.find("required"); it != schema.end()) {
      for (const auto& key : *it) {
        if (!value.contains(key.get<std::string>())) {
          errors.push_back(here + ": missing required property '" + key.get<std::string>() + "'");
        }
      }
    }
    for (const auto& [key, member] : value.items()) {
      if (props.contains(key)) {
        check(props[key], member, where + "/" + key, errors);
      } else if (schema.value("additionalProperties", true) == false) {
        errors.push_back(here + ": unexpected property '" + key + "'");
      }
    }
  }
  if (auto it = schema.find("anyOf"); it != schema.end()) {
    bool any = false;
    for (const auto& branch : *it) {
      std::vector<std::string> sub;
      check(branch, value, where, sub);
      any = any || sub.empty();
    }
    if (!any) errors.push_back(here + ": matches none of the anyOf alternatives");
  }
  if (auto it = schema.find("oneOf"); it != schema.end()) {
    std::size_t matches = 0;
    std::vector<std::string> closest;
    for (const auto& branch : *it) {
      std::vector<std::string> sub;
      check(branch, value, where, sub);
      // Branches rejected by a "const" discriminator say nothing useful.
      const bool discriminated = std::any_of(sub.begin(), sub.end(), [](const std::string& e) {
        return e.find(": must equal ") != std::string::npos;
      });
      if (sub.empty()) {
        ++matches;
      } else if (!discriminated && (closest.empty() || sub.size() < closest.size())) {
        closest = std::move(sub);
      }
    }
    if (matches == 0) {
      errors.insert(errors.end(), closest.begin(), closest.end());
      if (closest.empty()) errors.push_back(here + ": matches none of the oneOf alternatives");
    } else if (matches > 1) {
      errors.push_back(here + ": matches more than one oneOf alternative");
    }
  }
}

const SchemaValidator& job_schema() {
  static const SchemaValidator validator(json::parse(kJobSpecSchema));
  return validator;
}

}  // namespace iet::cli
