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

#include "kheap/workload.hpp"

#include <limits>
#include <random>

#include "kheap/errors.hpp"

namespace kheap {

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Random:
      return "random";
    case Ordering::Sorted:
      return "sorted";
    case Ordering::Reversed:
      return "reversed";
  }
  return "unknown";
}

Ordering parse_ordering(std::string_view s) {
  if (s == "random") return Ordering::Random;
  if (s == "sorted") return Ordering::Sorted;
  if (s == "reversed") return Ordering::Reversed;
  throw ArgumentError("unknown ordering '" + std::string(s) + "'");
}

namespace {

constexpr Element kInt32Min = std::numeric_limits<std::int32_t>::min();
constexpr Element kInt32Max = std::numeric_limits<std::int32_t>::max();

std::vector<Element> random_list(std::size_t n, std::uint64_t seed, ValueRange r) {
  std::mt19937_64 rng(seed);
  std::vector<Element> out(n);
  const auto span = static_cast<std::uint64_t>(r.upper) - static_cast<std::uint64_t>(r.lower);
  if (r.lower == kInt32Min && r.upper == kInt32Max) {
    for (auto& v : out) v = r.lower + static_cast<Element>(rng() >> 32);
    return out;
  }
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    for (auto& v : out) v = static_cast<Element>(rng());
    return out;
  }
  const std::uint64_t buckets = span + 1;
  // Largest multiple of `buckets` representable; draws above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % buckets + 1) % buckets;
  for (auto& v : out) {
    std::uint64_t x = rng();
    while (x > limit) x = rng();
    v = static_cast<Element>(static_cast<std::uint64_t>(r.lower) + x % buckets);
  }
  return out;
}

}  // namespace

std::vector<Element> generate(const Workload& w) {
  const std::size_t n = w.size;
  if (w.range && w.range->lower > w.range->upper) {
    throw ArgumentError("workload range lower bound exceeds upper bound");
  }
  switch (w.ordering) {
    case Ordering::Random:
      return random_list(n, w.seed, w.range.value_or(ValueRange{kInt32Min, kInt32Max}));
    case Ordering::Sorted:
    case Ordering::Reversed: {
      const Element lo = w.range ? w.range->lower : 0;
      if (w.range && n > 0 &&
          static_cast<std::uint64_t>(w.range->upper - lo) < static_cast<std::uint64_t>(n - 1)) {
        throw ArgumentError("workload range too narrow for a strictly monotone list");
      }
      std::vector<Element> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto offset = static_cast<Element>(w.ordering == Ordering::Sorted ? i : n - 1 - i);
        out[i] = lo + offset;
      }
      return out;
    }
  }
  return {};
}

std::uint64_t point_seed(std::uint64_t seed, std::size_t size) {
  std::uint64_t z = seed ^ (static_cast<std::uint64_t>(size) * 0x9E3779B97F4A7C15ull);
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<std::size_t> reference_size_sweep() {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 4096; n <= 16384; n += 2048) sizes.push_back(n);
  return sizes;
}

}  // namespace kheap
