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

#include "kheap/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>
#include <tuple>

#include "kheap/errors.hpp"
#include "kheap/report.hpp"

namespace kheap {

TimeSource steady_time_source() {
  return [] {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
  };
}

void ExperimentSpec::validate() const {
  if (sizes.empty()) throw ArgumentError("experiment needs at least one size");
  if (orderings.empty()) throw ArgumentError("experiment needs at least one ordering");
  if (arities.empty()) throw ArgumentError("experiment needs at least one arity");
  if (repetitions < 1) throw ArgumentError("repetitions must be >= 1");
  for (std::size_t k : arities) {
    HwConfig cfg = hw_config;
    cfg.arity = k;
    cfg.validate();
  }
  kheap::validate(sw_power_model);
  kheap::validate(hw_power_model);
}

CycleCostModel parse_cost_model(const KeyValues& kv, CycleCostModel m) {
  auto field = [&](const char* key, std::uint32_t& target) {
    if (auto v = kv.get_uint(key)) target = static_cast<std::uint32_t>(*v);
  };
  field("cost.child_read", m.child_read_cycles);
  field("cost.parent_compare", m.parent_compare_cycles);
  field("cost.swap", m.swap_cycles);
  field("cost.sift_up_level", m.sift_up_level_cycles);
  field("cost.fsm_overhead", m.fsm_overhead_cycles_per_op);
  field("cost.io", m.io_cycles_per_element);
  m.validate();
  return m;
}

KeyValues cost_model_to_key_values(const CycleCostModel& m) {
  KeyValues kv;
  kv.set("cost.child_read", std::to_string(m.child_read_cycles));
  kv.set("cost.parent_compare", std::to_string(m.parent_compare_cycles));
  kv.set("cost.swap", std::to_string(m.swap_cycles));
  kv.set("cost.sift_up_level", std::to_string(m.sift_up_level_cycles));
  kv.set("cost.fsm_overhead", std::to_string(m.fsm_overhead_cycles_per_op));
  kv.set("cost.io", std::to_string(m.io_cycles_per_element));
  return kv;
}

ExperimentSpec parse_experiment(const KeyValues& kv) {
  ExperimentSpec spec;
  if (auto v = kv.get_list("sizes")) {
    for (const auto& s : *v) spec.sizes.push_back(parse_uint(s));
  }
  if (auto v = kv.get_list("orderings")) {
    for (const auto& s : *v) spec.orderings.push_back(parse_ordering(s));
  }
  if (auto v = kv.get_list("arities")) {
    for (const auto& s : *v) spec.arities.push_back(parse_uint(s));
  }
  if (auto v = kv.get_uint("repetitions")) spec.repetitions = static_cast<std::uint32_t>(*v);
  if (auto v = kv.get_uint("cooldown_ms")) spec.cooldown_ms = static_cast<std::uint32_t>(*v);
  if (auto v = kv.get_uint("seed")) spec.seed = *v;
  if (auto v = kv.get_uint("capacity")) spec.hw_config.capacity = *v;
  if (auto v = kv.get_double("clock_mhz")) spec.hw_config.clock_hz = *v * 1e6;
  if (auto v = kv.get("output_dir")) spec.output_dir = *v;
  spec.hw_config.cost = parse_cost_model(kv);
  if (auto sub = kv.subtree("sw_power."); !sub.entries().empty()) {
    spec.sw_power_model = parse_power_model(sub);
  }
  if (auto sub = kv.subtree("hw_power."); !sub.entries().empty()) {
    spec.hw_power_model = parse_power_model(sub);
  }
  return spec;
}

TimingStats measure_software(std::span<const Element> input, std::size_t arity,
                             std::uint32_t repetitions, std::uint32_t cooldown_ms,
                             const TimeSource& clock) {
  if (repetitions < 1) throw ArgumentError("measure_software: repetitions must be >= 1");
  std::vector<Element> expected(input.begin(), input.end());
  std::sort(expected.begin(), expected.end());

  std::vector<double> samples;
  samples.reserve(repetitions);
  for (std::uint32_t r = 0; r < repetitions; ++r) {
    if (r > 0 && cooldown_ms > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(cooldown_ms));
    }
    const std::vector<Element> copy(input.begin(), input.end());
    const double start = clock();
    const std::vector<Element> sorted = heapsort(copy, arity);
    const double stop = clock();
    if (!std::isfinite(start) || !std::isfinite(stop) || stop < start) {
      throw EnvironmentError("timer returned a non-monotonic or invalid reading");
    }
    if (sorted != expected) throw std::runtime_error("heapsort output failed validation");
    samples.push_back(stop - start);
  }

  TimingStats stats;
  for (double s : samples) stats.mean_s += s;
  stats.mean_s /= static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double s : samples) ss += (s - stats.mean_s) * (s - stats.mean_s);
    stats.stddev_s = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  }
  return stats;
}

namespace {

struct SweepPoint {
  std::size_t size;
  Ordering ordering;
  std::size_t arity;
};

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::vector<ResultRow> run(const ExperimentSpec& spec, const TimeSource& clock) {
  spec.validate();

  std::vector<SweepPoint> points;
  for (std::size_t n : spec.sizes)
    for (Ordering o : spec.orderings)
      for (std::size_t k : spec.arities) points.push_back({n, o, k});
  std::sort(points.begin(), points.end(), [](const SweepPoint& a, const SweepPoint& b) {
    return std::tie(a.size, a.ordering, a.arity) < std::tie(b.size, b.ordering, b.arity);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const SweepPoint& a, const SweepPoint& b) {
                             return std::tie(a.size, a.ordering, a.arity) ==
                                    std::tie(b.size, b.ordering, b.arity);
                           }),
               points.end());

  auto workload_for = [&](const SweepPoint& p) {
    return generate({p.size, p.ordering, point_seed(spec.seed, p.size), std::nullopt});
  };

  std::vector<ResultRow> rows(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    rows[i].size = points[i].size;
    rows[i].ordering = points[i].ordering;
    rows[i].arity = points[i].arity;
  }

  // Hardware side: independent simulator per point, any completion order.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      HwConfig cfg = spec.hw_config;
      cfg.arity = points[i].arity;
      try {
        const SimResult sim = simulate(workload_for(points[i]), cfg);
        rows[i].hw_cycles = sim.total_cycles;
        rows[i].hw_time_s = sim.wall_time_s;
      } catch (const std::exception& e) {
        rows[i].error = std::string("simulation: ") + e.what();
      }
    }
  };
  {
    const std::size_t threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, points.size());
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Software side, serialized.
  for (std::size_t i = 0; i < points.size(); ++i) {
    ResultRow& row = rows[i];
    if (row.error) continue;
    try {
      const TimingStats t = measure_software(workload_for(points[i]), points[i].arity,
                                             spec.repetitions, spec.cooldown_ms, clock);
      row.sw_time_s = t.mean_s;
      row.sw_time_stddev = t.stddev_s;
      const PowerContext ctx{row.size, row.arity};
      row.sw_energy_j = estimate_energy(spec.sw_power_model, row.sw_time_s, ctx).energy_j;
      row.hw_energy_j = estimate_energy(spec.hw_power_model, row.hw_time_s, ctx).energy_j;
      const ImprovementRatios r =
          improvement_ratios({row.sw_time_s, row.sw_energy_j}, {row.hw_time_s, row.hw_energy_j});
      row.time_ratio = r.time_ratio;
      row.energy_ratio = r.energy_ratio;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }

  if (!spec.output_dir.empty()) {
    std::filesystem::create_directories(spec.output_dir);
    emit_report(rows, ReportFormat::Csv, spec.output_dir / "results.csv");
    emit_report(rows, ReportFormat::Markdown, spec.output_dir / "results.md");
    std::string errors;
    for (const auto& row : rows) {
      if (row.error) {
        errors += std::to_string(row.size) + "," + std::string(to_string(row.ordering)) + "," +
                  std::to_string(row.arity) + ": " + *row.error + "\n";
      }
    }
    if (!errors.empty()) write_text(spec.output_dir / "errors.txt", errors);
  }
  return rows;
}

ComplexityFit fit_n_log_k(std::span<const double> n, std::span<const double> y, std::size_t arity) {
  if (n.size() != y.size()) throw ArgumentError("fit_n_log_k: size mismatch");
  if (n.size() < 3) throw ArgumentError("complexity fit needs at least 3 points");
  if (arity < 2) throw ArgumentError("complexity fit needs arity >= 2");
  const double log_k = std::log(static_cast<double>(arity));
  std::vector<double> x(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(n[i] >= 1.0)) throw ArgumentError("complexity fit needs n >= 1");
    x[i] = n[i] * std::log(n[i]) / log_k;
  }
  double xy = 0.0;
  double xx = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xy += x[i] * y[i];
    xx += x[i] * x[i];
    mean_y += y[i];
  }
  mean_y /= static_cast<double>(y.size());
  if (xx == 0.0) throw ArgumentError("complexity fit is degenerate (all n = 1)");

  ComplexityFit fit;
  fit.coefficient = xy / xx;
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.coefficient * x[i];
    ss_res += r * r;
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  fit.r_squared = ss_tot == 0.0 ? 0.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

ComplexityFit fit_complexity(std::span<const ResultRow> rows, std::size_t arity) {
  std::vector<double> n;
  std::vector<double> y;
  std::optional<Ordering> ordering;
  for (const auto& row : rows) {
    if (row.arity != arity || row.error) continue;
    if (ordering && *ordering != row.ordering) {
      throw ArgumentError("fit_complexity: rows mix orderings");
    }
    ordering = row.ordering;
    n.push_back(static_cast<double>(row.size));
    y.push_back(static_cast<double>(row.hw_cycles));
  }
  return fit_n_log_k(n, y, arity);
}

namespace {

template <class Metric>
std::size_t argmin_arity(std::span<const ResultRow> rows, Metric metric) {
  const ResultRow* best = nullptr;
  for (const auto& row : rows) {
    if (row.error) continue;
    if (best && (row.size != best->size || row.ordering != best->ordering)) {
      throw ArgumentError("arity comparison needs rows with one size and ordering");
    }
    if (!best || metric(row) < metric(*best) ||
        (metric(row) == metric(*best) && row.arity < best->arity)) {
      best = &row;
    }
  }
  if (!best) throw ArgumentError("arity comparison needs at least one row");
  return best->arity;
}

}  // namespace

std::size_t argmin_energy_arity(std::span<const ResultRow> rows) {
  return argmin_arity(rows, [](const ResultRow& r) { return r.hw_energy_j; });
}

std::size_t argmin_time_arity(std::span<const ResultRow> rows) {
  return argmin_arity(rows, [](const ResultRow& r) { return r.hw_time_s; });
}

}  // namespace kheap
