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
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <variant>

#include "kheap/keyvalue.hpp"

namespace kheap {

struct ConstantPower {
  double watts = 0.0;
};

/// Power per input size; sizes between entries interpolate linearly, sizes
/// outside [first, last] are a RangeError.
struct PerSizeTable {
  std::map<std::size_t, double> watts;
};

/// P(k) = base_watts + watts_per_k * k.
struct AffineInArity {
  double base_watts = 0.0;
  double watts_per_k = 0.0;
};

using PowerModel = std::variant<ConstantPower, PerSizeTable, AffineInArity>;

/// Throws ConfigError on non-positive or non-finite watt values, or an empty table.
void validate(const PowerModel& model);

struct PowerContext {
  std::optional<std::size_t> size;
  std::optional<std::size_t> arity;
};

struct EnergyEstimate {
  double time_s = 0.0;
  double power_w = 0.0;
  double energy_j = 0.0;
};

double resolve_power(const PowerModel& model, const PowerContext& ctx);

/// E = P * t with P resolved from the model. Missing context for table or
/// affine models is an ArgumentError; table extrapolation a RangeError.
EnergyEstimate estimate_energy(const PowerModel& model, double time_s, const PowerContext& ctx = {});

struct TimeEnergy {
  double time_s = 0.0;
  double energy_j = 0.0;
};

/// Least-squares slope of energy against time through the origin:
/// sum(t * E) / sum(t^2).
double fit_constant_power(std::span<const TimeEnergy> pairs);

struct ImprovementRatios {
  double time_ratio = 0.0;    // > 1 means the hardware is faster
  double energy_ratio = 0.0;  // > 1 means the hardware uses less energy
};

ImprovementRatios improvement_ratios(const TimeEnergy& sw, const TimeEnergy& hw);

/// Model config, keys relative to the given KeyValues:
///   model = constant | table | affine
///   watts = <W>                          (constant)
///   table.<size> = <W>                   (table, one line per size)
///   base_watts = <W>, watts_per_k = <W>  (affine)
PowerModel parse_power_model(const KeyValues& kv);
PowerModel load_power_model(const std::filesystem::path& path);
KeyValues power_model_to_key_values(const PowerModel& model);

/// E / t per reference row, keyed by size.
PerSizeTable fpga_power_table_from_reference();
/// fit_constant_power over the reference Raspberry Pi columns.
ConstantPower pi_power_from_reference();
/// fit_constant_power over the reference FPGA columns.
ConstantPower fpga_power_from_reference();

}  // namespace kheap
