// Copyright 2026 The hyperlf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Strict JSON helpers shared by the file formats. Paths in errors use
// "$.key[3].sub" notation.

#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlf/bigint.hpp"
#include "hyperlf/errors.hpp"

namespace hyperlf::jsonio {

using Json = nlohmann::ordered_json;

inline Json parse(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what(), "$", e.byte);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
  if (!out) throw InvalidArgument("write failed for " + path);
}

[[noreturn]] inline void fail(const std::string& origin, const std::string& path, const std::string& msg) {
  throw ParseError(origin + ": " + path + ": " + msg, path);
}

inline void expect_object(const Json& v, const std::string& origin, const std::string& path) {
  if (!v.is_object()) fail(origin, path, "expected an object");
}

inline void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed, const std::string& origin,
                           const std::string& path) {
  expect_object(obj, origin, path);
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(origin, path + "." + key, "unknown field");
  }
}

inline const Json& require(const Json& obj, const char* key, const std::string& origin, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(origin, path + "." + key, "missing field");
  return *it;
}

/// Big integers are decimal strings; plain JSON integers are accepted too.
inline BigInt get_bigint(const Json& v, const std::string& origin, const std::string& path) {
  if (v.is_number_integer()) return BigInt(v.dump());
  if (!v.is_string()) fail(origin, path, "expected a decimal integer string");
  try {
    return parse_bigint(v.get<std::string>());
  } catch (const std::exception&) {
    fail(origin, path, "not a decimal integer: '" + v.get<std::string>() + "'");
  }
}

inline std::vector<BigInt> get_bigint_array(const Json& v, const std::string& origin, const std::string& path) {
  if (!v.is_array()) fail(origin, path, "expected an array of integer strings");
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_bigint(v[i], origin, path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::int64_t get_int(const Json& v, const std::string& origin, const std::string& path) {
  if (!v.is_number_integer()) fail(origin, path, "expected an integer");
  return v.get<std::int64_t>();
}

inline std::uint64_t get_uint(const Json& v, const std::string& origin, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    fail(origin, path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

inline double get_double(const Json& v, const std::string& origin, const std::string& path) {
  if (!v.is_number()) fail(origin, path, "expected a number");
  return v.get<double>();
}

inline Json bigint_array(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const auto& x : values) arr.push_back(x.get_str());
  return arr;
}

}  // namespace hyperlf::jsonio
