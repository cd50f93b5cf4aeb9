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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kheap {

using Element = std::int64_t;
using NodeIndex = std::size_t;

struct HeapConfig {
  std::size_t arity = 2;
  std::size_t capacity = 0;
};

/// Parent of node `i` in a flat k-ary tree rooted at index 0.
/// Throws ArgumentError for the root (i == 0) or arity < 2.
NodeIndex parent_index(NodeIndex i, std::size_t arity);

/// The k child slots of node `i`: [k*i + 1, k*i + k]. Not clipped to any heap size.
std::vector<NodeIndex> child_indices(NodeIndex i, std::size_t arity);

/// Fixed-capacity k-ary max-heap over 64-bit integers.
///
/// Sift-down promotes the first maximal child in child order and only swaps
/// when that child is strictly larger, so runs are deterministic with
/// duplicates. Every element comparison is counted.
class KHeap {
 public:
  explicit KHeap(HeapConfig config);

  void insert(Element v);
  Element extract_max();

  [[nodiscard]] Element top() const;
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] bool empty() const { return elements_.empty(); }
  [[nodiscard]] const HeapConfig& config() const { return config_; }
  [[nodiscard]] std::span<const Element> elements() const { return elements_; }
  [[nodiscard]] std::uint64_t comparisons() const { return comparisons_; }

  /// Full scan of the max-heap property.
  [[nodiscard]] bool is_valid() const;

 private:
  void sift_up(NodeIndex i);
  void sift_down(NodeIndex i);

  HeapConfig config_;
  std::vector<Element> elements_;
  std::uint64_t comparisons_ = 0;
};

/// Ascending sort: insert everything, then extract maxima from the back.
std::vector<Element> heapsort(std::span<const Element> input, std::size_t arity);

struct CountedSort {
  std::vector<Element> sorted;
  std::uint64_t comparisons = 0;
};

/// heapsort() that also reports the number of element comparisons performed.
CountedSort heapsort_counted(std::span<const Element> input, std::size_t arity);

}  // namespace kheap
