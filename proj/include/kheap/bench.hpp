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
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kheap/energy.hpp"
#include "kheap/hwsim.hpp"
#include "kheap/keyvalue.hpp"
#include "kheap/workload.hpp"

namespace kheap {

/// Monotonic time in seconds.
using TimeSource = std::function<double()>;
TimeSource steady_time_source();

struct ExperimentSpec {
  std::vector<std::size_t> sizes;
  std::vector<Ordering> orderings;
  std::vector<std::size_t> arities;
  std::uint32_t repetitions = 100;
  std::uint32_t cooldown_ms = 100;
  PowerModel sw_power_model = pi_power_from_reference();
  PowerModel hw_power_model = fpga_power_from_reference();
  HwConfig hw_config;  // arity is overridden per sweep point
  std::filesystem::path output_dir;  // empty: no files written
  std::uint64_t seed = 42;

  void validate() const;
};

/// Experiment config keys (all optional, defaults as in ExperimentSpec):
///   sizes, orderings, arities     comma lists
///   repetitions, cooldown_ms, seed, capacity
///   clock_mhz
///   cost.child_read, cost.parent_compare, cost.swap, cost.sift_up_level,
///   cost.fsm_overhead, cost.io
///   sw_power.*, hw_power.*        power model keys (see parse_power_model)
///   output_dir
ExperimentSpec parse_experiment(const KeyValues& kv);

/// cost.* keys, shared by experiment configs and calibrate output.
CycleCostModel parse_cost_model(const KeyValues& kv, CycleCostModel defaults = {});
KeyValues cost_model_to_key_values(const CycleCostModel& m);

struct ResultRow {
  std::size_t size = 0;
  Ordering ordering = Ordering::Random;
  std::size_t arity = 2;
  double sw_time_s = 0.0;
  double sw_time_stddev = 0.0;
  std::uint64_t hw_cycles = 0;
  double hw_time_s = 0.0;
  double sw_energy_j = 0.0;
  double hw_energy_j = 0.0;
  double time_ratio = 0.0;
  double energy_ratio = 0.0;
  std::optional<std::string> error;  // set when the point could not be run

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct TimingStats {
  double mean_s = 0.0;
  double stddev_s = 0.0;  // sample standard deviation; 0 for one repetition
};

/// Times `repetitions` heapsorts of fresh copies of `input`, sleeping
/// `cooldown_ms` between runs. Every output is checked against std::sort.
TimingStats measure_software(std::span<const Element> input, std::size_t arity,
                             std::uint32_t repetitions, std::uint32_t cooldown_ms,
                             const TimeSource& clock = steady_time_source());

/// One row per (size, ordering, arity), sorted by size, then ordering, then
/// arity. Simulations run concurrently; software timings run one at a time.
/// Writes results.csv and results.md (plus errors.txt if any point failed)
/// when spec.output_dir is set.
std::vector<ResultRow> run(const ExperimentSpec& spec,
                           const TimeSource& clock = steady_time_source());

struct ComplexityFit {
  double coefficient = 0.0;
  double r_squared = 0.0;
};

/// Fits y = c * n * log_k(n) through the origin. R^2 is 1 - SS_res / SS_tot
/// with SS_tot taken about the mean of y; it is reported as 0 when y is constant.
ComplexityFit fit_n_log_k(std::span<const double> n, std::span<const double> y, std::size_t arity);

/// fit_n_log_k over hw_cycles of the rows with this arity. Those rows must
/// share one ordering and number at least three.
ComplexityFit fit_complexity(std::span<const ResultRow> rows, std::size_t arity);

/// Arity with the lowest hw_energy_j (ties: smaller arity). Rows must share
/// size and ordering.
std::size_t argmin_energy_arity(std::span<const ResultRow> rows);
/// Same over hw_time_s.
std::size_t argmin_time_arity(std::span<const ResultRow> rows);

}  // namespace kheap
