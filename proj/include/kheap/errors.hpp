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

#include <stdexcept>
#include <string>

namespace kheap {

// Heap or simulator asked to hold more elements than it was sized for.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class EmptyHeapError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Invalid arity, clock, cost model or other configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Lookup outside the domain of a table (no extrapolation).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Host-side failures such as a misbehaving timer.
class EnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kheap
