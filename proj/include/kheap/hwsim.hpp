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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kheap/heap.hpp"

namespace kheap {

/// Cycles charged per step of the heap machine. Reduction-tree rounds are
/// not listed: each round costs one cycle.
struct CycleCostModel {
  std::uint32_t child_read_cycles = 1;
  std::uint32_t parent_compare_cycles = 1;
  std::uint32_t swap_cycles = 1;
  std::uint32_t sift_up_level_cycles = 1;
  std::uint32_t fsm_overhead_cycles_per_op = 1;
  std::uint32_t io_cycles_per_element = 1;

  void validate() const;
  friend bool operator==(const CycleCostModel&, const CycleCostModel&) = default;
};

struct HwConfig {
  std::size_t arity = 2;
  std::size_t capacity = 65536;
  double clock_hz = 100'000'000.0;
  CycleCostModel cost;

  /// Throws ConfigError unless arity is a power of two in [2, 256] and clock_hz > 0.
  void validate() const;
  friend bool operator==(const HwConfig&, const HwConfig&) = default;
};

enum class FsmPhase { Idle, LoadInput, InsertSiftUp, ExtractRoot, SiftDown, WriteBack, Done };

inline constexpr std::array<FsmPhase, 7> kAllPhases = {
    FsmPhase::Idle,     FsmPhase::LoadInput, FsmPhase::InsertSiftUp, FsmPhase::ExtractRoot,
    FsmPhase::SiftDown, FsmPhase::WriteBack, FsmPhase::Done};

std::string_view to_string(FsmPhase p);

/// True iff `trace` matches Idle LoadInput InsertSiftUp* (ExtractRoot SiftDown WriteBack)* Done.
bool is_legal_trace(std::span<const FsmPhase> trace);

/// Step counts of one run (or one phase of a run). Cycles are linear in the
/// cost model over these counts.
struct EventCounts {
  std::uint64_t child_reads = 0;
  std::uint64_t reduction_rounds = 0;
  std::uint64_t compares = 0;
  std::uint64_t swaps = 0;
  std::uint64_t sift_up_levels = 0;
  std::uint64_t fsm_ops = 0;
  std::uint64_t io_elements = 0;

  [[nodiscard]] std::uint64_t cycles(const CycleCostModel& cost) const;
  EventCounts& operator+=(const EventCounts& o);
  friend bool operator==(const EventCounts&, const EventCounts&) = default;
};

struct SimResult {
  std::vector<Element> sorted_output;
  std::uint64_t total_cycles = 0;
  double wall_time_s = 0.0;
  std::map<FsmPhase, std::uint64_t> phase_cycles;
  std::map<FsmPhase, EventCounts> phase_events;
  HwConfig config_echo;

  [[nodiscard]] EventCounts total_events() const;
  friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Bank holding heap node `i`: 0 for the root, (i - 1) mod k otherwise.
std::size_t bank_of(NodeIndex i, std::size_t arity);

/// log2(k) tournament rounds; throws ConfigError unless k is a power of two >= 2.
std::uint32_t reduction_rounds(std::size_t arity);

/// Cost of one sift-down level: parallel child read, tournament, compare
/// against the node, and the write-back when the node moves.
std::uint64_t sift_down_level_cycles(const HwConfig& cfg, bool swapped = true);

/// Throws ConfigError when clock_hz <= 0.
double cycles_to_seconds(std::uint64_t cycles, double clock_hz);

/// Heap storage split over k banks. Node i >= 1 lives in bank (i - 1) mod k at
/// row (i - 1) / k + 1; the root is row 0 of bank 0. The children of node p
/// are therefore exactly row p + 1 across all banks.
class BankedHeapMemory {
 public:
  BankedHeapMemory(std::size_t arity, std::size_t capacity);

  [[nodiscard]] Element read(NodeIndex i) const;
  void write(NodeIndex i, Element v);

  /// One-cycle read of every child slot of `parent`; slots at or beyond
  /// `occupancy` come back empty. Throws std::logic_error on a bank collision.
  [[nodiscard]] std::vector<std::optional<Element>> read_children(NodeIndex parent) const;

  [[nodiscard]] std::size_t arity() const { return banks_.size(); }
  [[nodiscard]] std::size_t occupancy() const { return occupancy_; }
  void set_occupancy(std::size_t n) { occupancy_ = n; }

 private:
  [[nodiscard]] std::size_t row_of(NodeIndex i) const;

  std::vector<std::vector<Element>> banks_;
  std::size_t occupancy_ = 0;
};

struct TournamentResult {
  std::optional<std::size_t> winner;  // slot index into the candidates
  std::uint32_t rounds = 0;
};

/// Pairwise max reduction, halving candidates each round. Ties keep the left
/// (lower slot) candidate. `candidates.size()` must be a power of two.
TournamentResult tournament_max(std::span<const std::optional<Element>> candidates);

/// Behavioral model of the heap module and its sequencing state machine.
class HeapSimulator {
 public:
  explicit HeapSimulator(HwConfig cfg);

  SimResult run(std::span<const Element> input);

  /// Phases entered during the last run, in order.
  [[nodiscard]] const std::vector<FsmPhase>& trace() const { return trace_; }

 private:
  void enter(FsmPhase next);
  void insert(Element v, EventCounts& ev);
  Element extract_root(EventCounts& ev);
  void sift_down(EventCounts& ev);

  HwConfig cfg_;
  std::uint32_t rounds_;
  BankedHeapMemory memory_;
  FsmPhase phase_ = FsmPhase::Idle;
  std::vector<FsmPhase> trace_;
};

/// Runs a fresh HeapSimulator. Throws CapacityError / ConfigError.
SimResult simulate(std::span<const Element> input, const HwConfig& cfg);

struct ReferencePoint {
  std::size_t size = 0;
  double seconds = 0.0;
};

struct Calibration {
  CycleCostModel model;
  std::vector<double> relative_errors;  // (simulated - reference) / reference, per point
  double max_relative_error = 0.0;
  double objective = 0.0;  // sum of squared relative errors
};

inline constexpr std::uint32_t kCalibrationGridMax = 8;

/// Integer grid search (each cost field 0..kCalibrationGridMax, subject to
/// CycleCostModel::validate) minimizing squared relative wall-time error.
/// Each reference size is simulated once on the random list seeded by
/// point_seed(workload_seed, size), at base_cfg's arity and clock. Ties go to
/// the model nearest base_cfg.cost in L1, then to the lexicographically
/// smallest field vector.
Calibration calibrate(std::span<const ReferencePoint> reference, const HwConfig& base_cfg,
                      std::uint64_t workload_seed);

}  // namespace kheap
