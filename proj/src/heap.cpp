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

#include "kheap/heap.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "kheap/errors.hpp"

namespace kheap {
namespace {

void check_arity(std::size_t arity) {
  if (arity < 2) throw ArgumentError("heap arity must be >= 2, got " + std::to_string(arity));
}

}  // namespace

NodeIndex parent_index(NodeIndex i, std::size_t arity) {
  check_arity(arity);
  if (i == 0) throw ArgumentError("parent_index: the root has no parent");
  return (i - 1) / arity;
}

std::vector<NodeIndex> child_indices(NodeIndex i, std::size_t arity) {
  check_arity(arity);
  std::vector<NodeIndex> out(arity);
  for (std::size_t c = 0; c < arity; ++c) out[c] = arity * i + c + 1;
  return out;
}

KHeap::KHeap(HeapConfig config) : config_(config) {
  check_arity(config_.arity);
  elements_.reserve(config_.capacity);
}

void KHeap::insert(Element v) {
  if (elements_.size() >= config_.capacity) {
    throw CapacityError("KHeap::insert: capacity " + std::to_string(config_.capacity) +
                        " exceeded");
  }
  elements_.push_back(v);
  sift_up(elements_.size() - 1);
}

Element KHeap::top() const {
  if (elements_.empty()) throw EmptyHeapError("KHeap::top on empty heap");
  return elements_.front();
}

Element KHeap::extract_max() {
  if (elements_.empty()) throw EmptyHeapError("KHeap::extract_max on empty heap");
  const Element result = elements_.front();
  elements_.front() = elements_.back();
  elements_.pop_back();
  if (!elements_.empty()) sift_down(0);
  return result;
}

bool KHeap::is_valid() const {
  for (NodeIndex i = 1; i < elements_.size(); ++i) {
    if (elements_[(i - 1) / config_.arity] < elements_[i]) return false;
  }
  return true;
}

void KHeap::sift_up(NodeIndex i) {
  const std::size_t k = config_.arity;
  while (i > 0) {
    const NodeIndex p = (i - 1) / k;
    ++comparisons_;
    if (!(elements_[p] < elements_[i])) break;
    std::swap(elements_[p], elements_[i]);
    i = p;
  }
}

void KHeap::sift_down(NodeIndex i) {
  const std::size_t k = config_.arity;
  const std::size_t n = elements_.size();
  for (;;) {
    const NodeIndex first = k * i + 1;
    if (first >= n) return;
    const NodeIndex last = std::min(first + k, n);
    NodeIndex best = first;
    for (NodeIndex c = first + 1; c < last; ++c) {
      ++comparisons_;
      if (elements_[best] < elements_[c]) best = c;
    }
    ++comparisons_;
    if (!(elements_[i] < elements_[best])) return;
    std::swap(elements_[i], elements_[best]);
    i = best;
  }
}

CountedSort heapsort_counted(std::span<const Element> input, std::size_t arity) {
  KHeap heap({arity, input.size()});
  for (Element v : input) heap.insert(v);
  CountedSort out;
  out.sorted.resize(input.size());
  for (std::size_t pos = input.size(); pos-- > 0;) out.sorted[pos] = heap.extract_max();
  out.comparisons = heap.comparisons();
  return out;
}

std::vector<Element> heapsort(std::span<const Element> input, std::size_t arity) {
  return heapsort_counted(input, arity).sorted;
}

}  // namespace kheap
