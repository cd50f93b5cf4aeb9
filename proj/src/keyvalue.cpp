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

#include "kheap/keyvalue.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "kheap/errors.hpp"

namespace kheap {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-') {
      return false;
    }
  }
  return true;
}

}  // namespace

double parse_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ArgumentError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_uint(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ArgumentError("not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::logic_error("format_double failed");
  return {buf, ptr};
}

KeyValues KeyValues::parse(std::string_view text) {
  std::map<std::string, std::string> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ArgumentError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!valid_key(key)) {
      throw ArgumentError("config line " + std::to_string(line_no) + ": bad key '" +
                          std::string(key) + "'");
    }
    if (!entries.emplace(std::string(key), std::string(value)).second) {
      throw ArgumentError("config line " + std::to_string(line_no) + ": duplicate key '" +
                          std::string(key) + "'");
    }
  }
  return KeyValues(std::move(entries));
}

KeyValues KeyValues::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::optional<std::string> KeyValues::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string KeyValues::require(const std::string& key) const {
  auto v = get(key);
  if (!v) throw ArgumentError("missing config key '" + key + "'");
  return *v;
}

std::optional<double> KeyValues::get_double(const std::string& key) const {
  auto v = get(key);
  if (!v) return std::nullopt;
  return parse_double(*v);
}

std::optional<std::uint64_t> KeyValues::get_uint(const std::string& key) const {
  auto v = get(key);
  if (!v) return std::nullopt;
  return parse_uint(*v);
}

std::optional<std::vector<std::string>> KeyValues::get_list(const std::string& key) const {
  auto v = get(key);
  if (!v) return std::nullopt;
  std::vector<std::string> items;
  std::string_view rest = *v;
  while (true) {
    const auto comma = rest.find(',');
    const auto item = trim(rest.substr(0, comma));
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return items;
}

KeyValues KeyValues::subtree(std::string_view prefix) const {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : entries_) {
    if (k.size() > prefix.size() && std::string_view(k).starts_with(prefix)) {
      out.emplace(k.substr(prefix.size()), v);
    }
  }
  return KeyValues(std::move(out));
}

std::string KeyValues::format() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

}  // namespace kheap
