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

#include "kheap/energy.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "kheap/errors.hpp"
#include "kheap/reference_data.hpp"

namespace kheap {
namespace {

void check_watts(double w, const char* what) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw ConfigError(std::string(what) + " must be a positive number of watts");
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

double lookup(const PerSizeTable& table, std::size_t size) {
  const auto& w = table.watts;
  const auto hi = w.lower_bound(size);
  if (hi != w.end() && hi->first == size) return hi->second;
  if (hi == w.begin() || hi == w.end()) {
    throw RangeError("power table has no data around size " + std::to_string(size));
  }
  const auto lo = std::prev(hi);
  const double frac = static_cast<double>(size - lo->first) / static_cast<double>(hi->first - lo->first);
  return lo->second + frac * (hi->second - lo->second);
}

}  // namespace

void validate(const PowerModel& model) {
  std::visit(Overloaded{
                 [](const ConstantPower& m) { check_watts(m.watts, "constant power"); },
                 [](const PerSizeTable& m) {
                   if (m.watts.empty()) throw ConfigError("power table is empty");
                   for (const auto& [size, w] : m.watts) check_watts(w, "power table entry");
                 },
                 [](const AffineInArity& m) {
                   check_watts(m.base_watts, "base_watts");
                   check_watts(m.watts_per_k, "watts_per_k");
                 },
             },
             model);
}

double resolve_power(const PowerModel& model, const PowerContext& ctx) {
  validate(model);
  return std::visit(Overloaded{
                        [](const ConstantPower& m) { return m.watts; },
                        [&](const PerSizeTable& m) {
                          if (!ctx.size) throw ArgumentError("power table needs the input size");
                          return lookup(m, *ctx.size);
                        },
                        [&](const AffineInArity& m) {
                          if (!ctx.arity) throw ArgumentError("affine power model needs the arity");
                          return m.base_watts + m.watts_per_k * static_cast<double>(*ctx.arity);
                        },
                    },
                    model);
}

EnergyEstimate estimate_energy(const PowerModel& model, double time_s, const PowerContext& ctx) {
  if (!(time_s >= 0.0) || !std::isfinite(time_s)) {
    throw ArgumentError("estimate_energy: time must be finite and non-negative");
  }
  const double p = resolve_power(model, ctx);
  return {time_s, p, p * time_s};
}

double fit_constant_power(std::span<const TimeEnergy> pairs) {
  if (pairs.empty()) throw ArgumentError("fit_constant_power: no data");
  double te = 0.0;
  double tt = 0.0;
  for (const auto& p : pairs) {
    if (!(p.time_s > 0.0)) throw ArgumentError("fit_constant_power: times must be positive");
    te += p.time_s * p.energy_j;
    tt += p.time_s * p.time_s;
  }
  return te / tt;
}

ImprovementRatios improvement_ratios(const TimeEnergy& sw, const TimeEnergy& hw) {
  if (!(hw.time_s > 0.0) || !(hw.energy_j > 0.0)) {
    throw ArgumentError("improvement_ratios: hardware time and energy must be positive");
  }
  return {sw.time_s / hw.time_s, sw.energy_j / hw.energy_j};
}

PowerModel parse_power_model(const KeyValues& kv) {
  const std::string kind = kv.require("model");
  PowerModel model;
  if (kind == "constant") {
    model = ConstantPower{parse_double(kv.require("watts"))};
  } else if (kind == "table") {
    PerSizeTable t;
    const KeyValues entries = kv.subtree("table.");
    for (const auto& [key, value] : entries.entries()) {
      t.watts[parse_uint(key)] = parse_double(value);
    }
    model = std::move(t);
  } else if (kind == "affine") {
    model = AffineInArity{parse_double(kv.require("base_watts")),
                          parse_double(kv.require("watts_per_k"))};
  } else {
    throw ConfigError("unknown power model '" + kind + "'");
  }
  validate(model);
  return model;
}

PowerModel load_power_model(const std::filesystem::path& path) {
  return parse_power_model(KeyValues::load(path));
}

KeyValues power_model_to_key_values(const PowerModel& model) {
  KeyValues kv;
  std::visit(Overloaded{
                 [&](const ConstantPower& m) {
                   kv.set("model", "constant");
                   kv.set("watts", format_double(m.watts));
                 },
                 [&](const PerSizeTable& m) {
                   kv.set("model", "table");
                   for (const auto& [size, w] : m.watts) {
                     kv.set("table." + std::to_string(size), format_double(w));
                   }
                 },
                 [&](const AffineInArity& m) {
                   kv.set("model", "affine");
                   kv.set("base_watts", format_double(m.base_watts));
                   kv.set("watts_per_k", format_double(m.watts_per_k));
                 },
             },
             model);
  return kv;
}

PerSizeTable fpga_power_table_from_reference() {
  PerSizeTable t;
  for (const auto& row : reference::kReferenceRuns) {
    t.watts[row.size] = row.fpga_energy_mj / row.fpga_time_ms;
  }
  return t;
}

ConstantPower pi_power_from_reference() {
  std::vector<TimeEnergy> pairs;
  for (const auto& row : reference::kReferenceRuns) {
    pairs.push_back({row.pi_time_ms * 1e-3, row.pi_energy_mj * 1e-3});
  }
  return {fit_constant_power(pairs)};
}

ConstantPower fpga_power_from_reference() {
  std::vector<TimeEnergy> pairs;
  for (const auto& row : reference::kReferenceRuns) {
    pairs.push_back({row.fpga_time_ms * 1e-3, row.fpga_energy_mj * 1e-3});
  }
  return {fit_constant_power(pairs)};
}

}  // namespace kheap
