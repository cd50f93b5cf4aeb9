// Copyright 2026 The kheapsort Authors.
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

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kheap {

/// Flat `key = value` configuration text.
///
///   line    := blank | comment | entry
///   comment := '#' anything
///   entry   := key '=' value
///   key     := [A-Za-z0-9_.-]+
///
/// Whitespace around keys and values is trimmed; a `#` after a value starts a
/// comment. Duplicate keys are an error.
class KeyValues {
 public:
  KeyValues() = default;
  explicit KeyValues(std::map<std::string, std::string> entries) : entries_(std::move(entries)) {}

  static KeyValues parse(std::string_view text);
  static KeyValues load(const std::filesystem::path& path);

  [[nodiscard]] bool contains(const std::string& key) const { return entries_.contains(key); }
  [[nodiscard]] std::optional<std::string> get(const std::string& key) const;
  [[nodiscard]] std::string require(const std::string& key) const;

  [[nodiscard]] std::optional<double> get_double(const std::string& key) const;
  [[nodiscard]] std::optional<std::uint64_t> get_uint(const std::string& key) const;
  /// Comma-separated list.
  [[nodiscard]] std::optional<std::vector<std::string>> get_list(const std::string& key) const;

  /// Entries under `prefix`, with the prefix stripped.
  [[nodiscard]] KeyValues subtree(std::string_view prefix) const;

  [[nodiscard]] const std::map<std::string, std::string>& entries() const { return entries_; }
  void set(std::string key, std::string value) { entries_[std::move(key)] = std::move(value); }

  /// Sorted `key = value` lines.
  [[nodiscard]] std::string format() const;

 private:
  std::map<std::string, std::string> entries_;
};

double parse_double(std::string_view s);
std::uint64_t parse_uint(std::string_view s);
/// Shortest representation that parses back to the same double.
std::string format_double(double v);

}  // namespace kheap
