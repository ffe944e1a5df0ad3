#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aqm/node_id.hpp"

namespace aqm::io::detail {

using nlohmann::json;

/// Thrown while walking a document; converted to ParseError at the public
/// boundary. Never escapes the io translation units.
struct parse_failure {
  std::string code;
  std::string message;
};

[[noreturn]] inline void fail(std::string code, std::string message) {
  throw parse_failure{std::move(code), std::move(message)};
}

inline void check_keys(const json& object, const std::string& path,
                       std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, ignored] : object.items()) {
    bool known = false;
    for (std::string_view candidate : allowed) known = known || key == candidate;
    if (!known) fail("unknown_field", path + ": unknown field '" + key + "'");
  }
}

inline const json& expect_object(const json& value, const std::string& path) {
  if (!value.is_object()) fail("wrong_type", path + ": expected an object");
  return value;
}

inline const json& expect_array(const json& value, const std::string& path) {
  if (!value.is_array()) fail("wrong_type", path + ": expected an array");
  return value;
}

inline std::string expect_string(const json& value, const std::string& path) {
  if (!value.is_string()) fail("wrong_type", path + ": expected a string");
  return value.get<std::string>();
}

inline double expect_number(const json& value, const std::string& path) {
  if (!value.is_number()) fail("wrong_type", path + ": expected a number");
  return value.get<double>();
}

inline bool expect_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) fail("wrong_type", path + ": expected a boolean");
  return value.get<bool>();
}

inline std::size_t expect_index(const json& value, const std::string& path) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    fail("wrong_type", path + ": expected a non-negative integer");
  }
  return static_cast<std::size_t>(value.get<long long>());
}

inline const json& require(const json& object, const std::string& path, const char* key) {
  if (!object.contains(key)) fail("missing_field", path + ": missing field '" + key + "'");
  return object.at(key);
}

inline std::string require_string(const json& object, const std::string& path,
                                  const char* key) {
  return expect_string(require(object, path, key), path + "." + key);
}

inline std::string string_or(const json& object, const std::string& path, const char* key,
                             std::string fallback) {
  if (!object.contains(key)) return fallback;
  return expect_string(object.at(key), path + "." + key);
}

inline NodeId require_path(const json& object, const std::string& path, const char* key) {
  return NodeId::parse(require_string(object, path, key));
}

inline std::vector<std::string> string_array(const json& value, const std::string& path) {
  expect_array(value, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(expect_string(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::vector<NodeId> path_array(const json& value, const std::string& path) {
  std::vector<NodeId> out;
  for (std::string& dotted : string_array(value, path)) out.push_back(NodeId::parse(dotted));
  return out;
}

inline std::string element_path(const std::string& path, const char* key, std::size_t index) {
  return path.empty() ? std::string(key) + "[" + std::to_string(index) + "]"
                      : path + "." + key + "[" + std::to_string(index) + "]";
}

/// The one rendering every document format uses: two-space indentation plus a
/// trailing newline. nlohmann's object backing is std::map, so keys are
/// already sorted.
inline std::string dump_canonical(const json& document) { return document.dump(2) + "\n"; }

}  // namespace aqm::io::detail
