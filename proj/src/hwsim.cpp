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

#include "kheap/hwsim.hpp"

#include <array>
#include <bit>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

#include "kheap/errors.hpp"
#include "kheap/workload.hpp"

namespace kheap {

void CycleCostModel::validate() const {
  if (child_read_cycles < 1) throw ConfigError("child_read_cycles must be >= 1");
  if (swap_cycles < 1) throw ConfigError("swap_cycles must be >= 1");
  if (sift_up_level_cycles < 1) throw ConfigError("sift_up_level_cycles must be >= 1");
}

void HwConfig::validate() const {
  if (arity < 2 || arity > 256 || !std::has_single_bit(arity)) {
    throw ConfigError("hardware arity must be a power of two in [2, 256], got " +
                      std::to_string(arity));
  }
  if (!(clock_hz > 0.0) || !std::isfinite(clock_hz)) {
    throw ConfigError("clock_hz must be positive");
  }
  cost.validate();
}

std::string_view to_string(FsmPhase p) {
  switch (p) {
    case FsmPhase::Idle:
      return "Idle";
    case FsmPhase::LoadInput:
      return "LoadInput";
    case FsmPhase::InsertSiftUp:
      return "InsertSiftUp";
    case FsmPhase::ExtractRoot:
      return "ExtractRoot";
    case FsmPhase::SiftDown:
      return "SiftDown";
    case FsmPhase::WriteBack:
      return "WriteBack";
    case FsmPhase::Done:
      return "Done";
  }
  return "?";
}

namespace {

bool legal_transition(FsmPhase from, FsmPhase to) {
  using P = FsmPhase;
  switch (from) {
    case P::Idle:
      return to == P::LoadInput;
    case P::LoadInput:
    case P::InsertSiftUp:
      return to == P::InsertSiftUp || to == P::ExtractRoot || to == P::Done;
    case P::ExtractRoot:
      return to == P::SiftDown;
    case P::SiftDown:
      return to == P::WriteBack;
    case P::WriteBack:
      return to == P::ExtractRoot || to == P::Done;
    case P::Done:
      return false;
  }
  return false;
}

}  // namespace

bool is_legal_trace(std::span<const FsmPhase> trace) {
  if (trace.size() < 3 || trace.front() != FsmPhase::Idle || trace.back() != FsmPhase::Done) {
    return false;
  }
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (!legal_transition(trace[i - 1], trace[i])) return false;
  }
  return true;
}

std::uint64_t EventCounts::cycles(const CycleCostModel& c) const {
  return child_reads * c.child_read_cycles + reduction_rounds + compares * c.parent_compare_cycles +
         swaps * c.swap_cycles + sift_up_levels * c.sift_up_level_cycles +
         fsm_ops * c.fsm_overhead_cycles_per_op + io_elements * c.io_cycles_per_element;
}

EventCounts& EventCounts::operator+=(const EventCounts& o) {
  child_reads += o.child_reads;
  reduction_rounds += o.reduction_rounds;
  compares += o.compares;
  swaps += o.swaps;
  sift_up_levels += o.sift_up_levels;
  fsm_ops += o.fsm_ops;
  io_elements += o.io_elements;
  return *this;
}

EventCounts SimResult::total_events() const {
  EventCounts total;
  for (const auto& [phase, ev] : phase_events) total += ev;
  return total;
}

std::size_t bank_of(NodeIndex i, std::size_t arity) {
  if (arity == 0) throw ArgumentError("bank_of: arity must be positive");
  return i == 0 ? 0 : (i - 1) % arity;
}

std::uint32_t reduction_rounds(std::size_t arity) {
  if (arity < 2 || !std::has_single_bit(arity)) {
    throw ConfigError("reduction tree needs a power-of-two arity >= 2, got " +
                      std::to_string(arity));
  }
  return static_cast<std::uint32_t>(std::countr_zero(arity));
}

std::uint64_t sift_down_level_cycles(const HwConfig& cfg, bool swapped) {
  cfg.validate();
  const auto& c = cfg.cost;
  std::uint64_t cycles = std::uint64_t{c.child_read_cycles} + reduction_rounds(cfg.arity) +
                         c.parent_compare_cycles;
  if (swapped) cycles += c.swap_cycles;
  return cycles;
}

double cycles_to_seconds(std::uint64_t cycles, double clock_hz) {
  if (!(clock_hz > 0.0) || !std::isfinite(clock_hz)) {
    throw ConfigError("clock frequency must be positive");
  }
  return static_cast<double>(cycles) / clock_hz;
}

// --- BankedHeapMemory ------------------------------------------------------

BankedHeapMemory::BankedHeapMemory(std::size_t arity, std::size_t capacity)
    : banks_(arity, std::vector<Element>(capacity / std::max<std::size_t>(arity, 1) + 2)) {
  if (arity < 1) throw ConfigError("BankedHeapMemory needs at least one bank");
}

std::size_t BankedHeapMemory::row_of(NodeIndex i) const {
  return i == 0 ? 0 : (i - 1) / banks_.size() + 1;
}

Element BankedHeapMemory::read(NodeIndex i) const {
  return banks_[bank_of(i, banks_.size())].at(row_of(i));
}

void BankedHeapMemory::write(NodeIndex i, Element v) {
  banks_[bank_of(i, banks_.size())].at(row_of(i)) = v;
}

std::vector<std::optional<Element>> BankedHeapMemory::read_children(NodeIndex parent) const {
  const std::size_t k = banks_.size();
  const NodeIndex first = k * parent + 1;
  std::vector<bool> busy(k, false);
  std::vector<std::optional<Element>> row(k);
  for (std::size_t c = 0; c < k; ++c) {
    const NodeIndex child = first + c;
    const std::size_t bank = bank_of(child, k);
    if (busy[bank]) {
      throw std::logic_error("bank collision reading children of node " + std::to_string(parent));
    }
    busy[bank] = true;
    if (child < occupancy_) row[c] = banks_[bank].at(row_of(child));
  }
  return row;
}

// --- tournament ------------------------------------------------------------

TournamentResult tournament_max(std::span<const std::optional<Element>> candidates) {
  if (candidates.empty() || !std::has_single_bit(candidates.size())) {
    throw ArgumentError("tournament needs a power-of-two number of slots");
  }
  struct Entry {
    std::optional<Element> value;
    std::size_t slot;
  };
  std::vector<Entry> field;
  field.reserve(candidates.size());
  for (std::size_t s = 0; s < candidates.size(); ++s) field.push_back({candidates[s], s});

  TournamentResult result;
  while (field.size() > 1) {
    std::vector<Entry> next;
    next.reserve(field.size() / 2);
    for (std::size_t j = 0; j + 1 < field.size(); j += 2) {
      const Entry& left = field[j];
      const Entry& right = field[j + 1];
      const bool right_wins = right.value && (!left.value || *left.value < *right.value);
      next.push_back(right_wins ? right : left);
    }
    field = std::move(next);
    ++result.rounds;
  }
  if (field.front().value) result.winner = field.front().slot;
  return result;
}

// --- HeapSimulator ---------------------------------------------------------

HeapSimulator::HeapSimulator(HwConfig cfg)
    : cfg_((cfg.validate(), cfg)),
      rounds_(reduction_rounds(cfg_.arity)),
      memory_(cfg_.arity, cfg_.capacity) {}

void HeapSimulator::enter(FsmPhase next) {
  if (!legal_transition(phase_, next)) {
    throw std::logic_error("illegal FSM transition " + std::string(to_string(phase_)) + " -> " +
                           std::string(to_string(next)));
  }
  phase_ = next;
  trace_.push_back(next);
}

void HeapSimulator::insert(Element v, EventCounts& ev) {
  ++ev.fsm_ops;
  const std::size_t k = cfg_.arity;
  NodeIndex i = memory_.occupancy();
  memory_.set_occupancy(i + 1);
  memory_.write(i, v);
  while (i > 0) {
    const NodeIndex p = (i - 1) / k;
    const Element pv = memory_.read(p);
    ++ev.compares;
    if (!(pv < v)) break;
    memory_.write(i, pv);
    memory_.write(p, v);
    ++ev.swaps;
    ++ev.sift_up_levels;
    i = p;
  }
}

Element HeapSimulator::extract_root(EventCounts& ev) {
  ++ev.fsm_ops;
  const Element top = memory_.read(0);
  const std::size_t last = memory_.occupancy() - 1;
  const Element moved = memory_.read(last);
  memory_.set_occupancy(last);
  if (last > 0) memory_.write(0, moved);
  return top;
}

void HeapSimulator::sift_down(EventCounts& ev) {
  const std::size_t k = cfg_.arity;
  NodeIndex i = 0;
  for (;;) {
    const NodeIndex first = k * i + 1;
    if (first >= memory_.occupancy()) return;
    const auto row = memory_.read_children(i);
    ++ev.child_reads;
    const TournamentResult t = tournament_max(row);
    ev.reduction_rounds += t.rounds;
    ++ev.compares;
    const Element node = memory_.read(i);
    const Element best = *row[*t.winner];
    if (!(node < best)) return;
    const NodeIndex child = first + *t.winner;
    memory_.write(i, best);
    memory_.write(child, node);
    ++ev.swaps;
    i = child;
  }
}

SimResult HeapSimulator::run(std::span<const Element> input) {
  if (input.size() > cfg_.capacity) {
    throw CapacityError("simulate: " + std::to_string(input.size()) +
                        " elements exceed hardware capacity " + std::to_string(cfg_.capacity));
  }
  phase_ = FsmPhase::Idle;
  trace_.assign(1, FsmPhase::Idle);
  memory_.set_occupancy(0);

  SimResult result;
  result.config_echo = cfg_;
  auto& ev = result.phase_events;
  for (FsmPhase p : kAllPhases) ev[p] = {};

  ++ev[FsmPhase::Idle].fsm_ops;
  enter(FsmPhase::LoadInput);
  ev[FsmPhase::LoadInput].io_elements += input.size();

  for (Element v : input) {
    enter(FsmPhase::InsertSiftUp);
    insert(v, ev[FsmPhase::InsertSiftUp]);
  }

  result.sorted_output.resize(input.size());
  for (std::size_t pos = input.size(); pos-- > 0;) {
    enter(FsmPhase::ExtractRoot);
    const Element top = extract_root(ev[FsmPhase::ExtractRoot]);
    enter(FsmPhase::SiftDown);
    sift_down(ev[FsmPhase::SiftDown]);
    enter(FsmPhase::WriteBack);
    ++ev[FsmPhase::WriteBack].io_elements;
    result.sorted_output[pos] = top;
  }

  enter(FsmPhase::Done);
  ++ev[FsmPhase::Done].fsm_ops;

  for (const auto& [phase, counts] : ev) {
    const std::uint64_t c = counts.cycles(cfg_.cost);
    result.phase_cycles[phase] = c;
    result.total_cycles += c;
  }
  result.wall_time_s = cycles_to_seconds(result.total_cycles, cfg_.clock_hz);
  return result;
}

SimResult simulate(std::span<const Element> input, const HwConfig& cfg) {
  HeapSimulator sim(cfg);
  return sim.run(input);
}

// --- calibration -----------------------------------------------------------

namespace {

using CostVector = std::array<std::uint32_t, 6>;

CostVector to_vector(const CycleCostModel& m) {
  return {m.child_read_cycles,    m.parent_compare_cycles,      m.swap_cycles,
          m.sift_up_level_cycles, m.fsm_overhead_cycles_per_op, m.io_cycles_per_element};
}

CycleCostModel from_vector(const CostVector& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

}  // namespace

Calibration calibrate(std::span<const ReferencePoint> reference, const HwConfig& base_cfg,
                      std::uint64_t workload_seed) {
  if (reference.empty()) throw ArgumentError("calibrate: empty reference");
  base_cfg.validate();

  // Cycles are linear in the cost fields, so one simulation per size fixes
  // every candidate's cycle count.
  struct Point {
    std::array<double, 6> weights;
    double fixed;  // reduction rounds, one cycle each
    double reference_s;
  };
  std::vector<Point> points;
  for (const auto& ref : reference) {
    if (!(ref.seconds > 0.0)) throw ArgumentError("calibrate: reference times must be positive");
    const auto input = generate(
        {ref.size, Ordering::Random, point_seed(workload_seed, ref.size), std::nullopt});
    const EventCounts ev = simulate(input, base_cfg).total_events();
    points.push_back({{static_cast<double>(ev.child_reads), static_cast<double>(ev.compares),
                       static_cast<double>(ev.swaps), static_cast<double>(ev.sift_up_levels),
                       static_cast<double>(ev.fsm_ops), static_cast<double>(ev.io_elements)},
                      static_cast<double>(ev.reduction_rounds),
                      ref.seconds});
  }

  const CostVector base = to_vector(base_cfg.cost);
  auto distance = [&](const CostVector& v) {
    std::uint32_t d = 0;
    for (std::size_t f = 0; f < v.size(); ++f) d += v[f] > base[f] ? v[f] - base[f] : base[f] - v[f];
    return d;
  };

  CostVector best{};
  double best_objective = std::numeric_limits<double>::infinity();
  std::uint32_t best_distance = 0;
  CostVector v{};
  const std::uint32_t hi = kCalibrationGridMax;
  for (v[0] = 1; v[0] <= hi; ++v[0])
    for (v[1] = 0; v[1] <= hi; ++v[1])
      for (v[2] = 1; v[2] <= hi; ++v[2])
        for (v[3] = 1; v[3] <= hi; ++v[3])
          for (v[4] = 0; v[4] <= hi; ++v[4])
            for (v[5] = 0; v[5] <= hi; ++v[5]) {
              double objective = 0.0;
              for (const auto& p : points) {
                double cycles = p.fixed;
                for (std::size_t f = 0; f < 6; ++f) cycles += p.weights[f] * v[f];
                const double rel = (cycles / base_cfg.clock_hz - p.reference_s) / p.reference_s;
                objective += rel * rel;
              }
              const std::uint32_t d = distance(v);
              if (objective < best_objective ||
                  (objective == best_objective && d < best_distance)) {
                best = v;
                best_objective = objective;
                best_distance = d;
              }
            }

  Calibration out;
  out.model = from_vector(best);
  out.objective = best_objective;
  for (const auto& p : points) {
    double cycles = p.fixed;
    for (std::size_t f = 0; f < 6; ++f) cycles += p.weights[f] * best[f];
    const double rel = (cycles / base_cfg.clock_hz - p.reference_s) / p.reference_s;
    out.relative_errors.push_back(rel);
    out.max_relative_error = std::max(out.max_relative_error, std::abs(rel));
  }
  return out;
}

}  // namespace kheap
