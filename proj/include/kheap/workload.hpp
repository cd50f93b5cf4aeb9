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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kheap/heap.hpp"

namespace kheap {

enum class Ordering { Random, Sorted, Reversed };

std::string_view to_string(Ordering o);
/// Accepts "random", "sorted", "reversed". Throws ArgumentError otherwise.
Ordering parse_ordering(std::string_view s);

struct ValueRange {
  Element lower = 0;
  Element upper = 0;
};

/// One input list description. `seed` only matters for Ordering::Random.
///
/// Without an explicit range, Sorted/Reversed produce 0..n-1 and Random draws
/// from the full signed 32-bit range.
struct Workload {
  std::size_t size = 0;
  Ordering ordering = Ordering::Random;
  std::uint64_t seed = 0;
  std::optional<ValueRange> range;
};

/// Deterministic list for `w`.
///
/// Random lists come from std::mt19937_64, whose output sequence is fixed by
/// the C++ standard. Draws are mapped to the range without
/// std::uniform_int_distribution (implementation-defined) so lists are equal
/// across standard libraries: the full 32-bit range takes the top 32 bits of
/// each draw, narrower ranges use rejection sampling on the low bits.
std::vector<Element> generate(const Workload& w);

/// Seed for the random list of one sweep point: splitmix64 of (seed, size).
/// Sweeps and calibration use this so every size gets an independent list
/// instead of a prefix of the same stream.
std::uint64_t point_seed(std::uint64_t seed, std::size_t size);

/// Input sizes 4096, 6144, ..., 16384.
std::vector<std::size_t> reference_size_sweep();

}  // namespace kheap
