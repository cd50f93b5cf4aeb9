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

#include "doctest.h"
#include "kheap/errors.hpp"

using namespace kheap;

TEST_CASE("parse key-value text") {
  const auto kv = KeyValues::parse(
      "# experiment\n"
      "\n"
      "sizes = 4096, 8192 ,16384\n"
      "  seed=7   # trailing comment\n"
      "hw_power.model = constant\r\n"
      "hw_power.watts = 0.2\n");
  CHECK(kv.get_list("sizes") == std::vector<std::string>{"4096", "8192", "16384"});
  CHECK(kv.get_uint("seed") == 7u);
  CHECK(kv.get("missing") == std::nullopt);
  CHECK_THROWS_AS(kv.require("missing"), ArgumentError);

  const auto sub = kv.subtree("hw_power.");
  CHECK(sub.entries().size() == 2);
  CHECK(sub.get("model") == "constant");
  CHECK(sub.get_double("watts") == 0.2);
}

TEST_CASE("malformed key-value text") {
  CHECK_THROWS_AS(KeyValues::parse("novalue\n"), ArgumentError);
  CHECK_THROWS_AS(KeyValues::parse("a = 1\na = 2\n"), ArgumentError);
  CHECK_THROWS_AS(KeyValues::parse("bad key = 1\n"), ArgumentError);
  CHECK_THROWS_AS(KeyValues::parse("x = abc").get_double("x"), ArgumentError);
  CHECK_THROWS_AS(KeyValues::parse("x = -3").get_uint("x"), ArgumentError);
  CHECK_THROWS_AS(KeyValues::load("/nonexistent/file.cfg"), IoError);
}

TEST_CASE("format is parseable") {
  KeyValues kv;
  kv.set("b", "2");
  kv.set("a.x", "1.5");
  CHECK(kv.format() == "a.x = 1.5\nb = 2\n");
  CHECK(KeyValues::parse(kv.format()).entries() == kv.entries());
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.0, 1.0, 0.1, 3.4175111390866966, 1e-300, 5.386e-3, 123456789.125}) {
    CHECK(parse_double(format_double(v)) == v);
  }
}
