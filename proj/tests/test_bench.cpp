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

#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "kheap/errors.hpp"
#include "kheap/report.hpp"

using namespace kheap;

namespace {

// Advances by a fixed step on every reading.
TimeSource stepping_clock(double step) {
  return [t = 0.0, step]() mutable {
    t += step;
    return t;
  };
}

ExperimentSpec small_spec() {
  ExperimentSpec spec;
  spec.sizes = {256};
  spec.orderings = {Ordering::Random};
  spec.arities = {4};
  spec.repetitions = 1;
  spec.cooldown_ms = 0;
  return spec;
}

ResultRow row_with(std::size_t n, std::size_t k, std::uint64_t cycles, double energy = 0.0) {
  ResultRow r;
  r.size = n;
  r.arity = k;
  r.hw_cycles = cycles;
  r.hw_time_s = static_cast<double>(cycles) / 100e6;
  r.hw_energy_j = energy;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("measure_software") {
  const std::vector<Element> in{5, 3, 9, 1, 1, 0};
  SUBCASE("one repetition has zero spread") {
    const auto t = measure_software(in, 2, 1, 0);
    CHECK(t.stddev_s == 0.0);
    CHECK(t.mean_s >= 0.0);
  }
  SUBCASE("constant synthetic timer") {
    const auto t = measure_software(in, 4, 25, 0, stepping_clock(0.005));
    CHECK(t.mean_s == doctest::Approx(0.005).epsilon(1e-9));
    CHECK(t.stddev_s == doctest::Approx(0.0).epsilon(1e-9));
  }
  SUBCASE("timer running backwards") {
    CHECK_THROWS_AS(measure_software(in, 2, 3, 0, stepping_clock(-1.0)), EnvironmentError);
    CHECK_THROWS_AS(measure_software(in, 2, 1, 0, [] { return NAN; }), EnvironmentError);
  }
  SUBCASE("zero repetitions") {
    CHECK_THROWS_AS(measure_software(in, 2, 0, 0), ArgumentError);
  }
  SUBCASE("cooldown pauses between repetitions") {
    const auto start = std::chrono::steady_clock::now();
    measure_software(in, 2, 3, 20);
    CHECK(std::chrono::steady_clock::now() - start >= std::chrono::milliseconds(40));
  }
}

TEST_CASE("run with a single point") {
  const auto rows = run(small_spec());
  REQUIRE(rows.size() == 1);
  const auto& r = rows.front();
  CHECK_FALSE(r.error.has_value());
  CHECK(r.size == 256);
  CHECK(r.arity == 4);
  CHECK(r.hw_cycles > 0);
  CHECK(r.hw_time_s == static_cast<double>(r.hw_cycles) / 100e6);
  const auto ratios = improvement_ratios({r.sw_time_s, r.sw_energy_j}, {r.hw_time_s, r.hw_energy_j});
  CHECK(r.time_ratio == ratios.time_ratio);
  CHECK(r.energy_ratio == ratios.energy_ratio);
}

TEST_CASE("run orders rows canonically and is deterministic on the hardware side") {
  auto spec = small_spec();
  spec.sizes = {512, 128};
  spec.orderings = {Ordering::Reversed, Ordering::Random};
  spec.arities = {8, 2};
  const auto a = run(spec, stepping_clock(1e-3));
  const auto b = run(spec, stepping_clock(1e-3));
  REQUIRE(a.size() == 8);
  CHECK(a.front().size == 128);
  CHECK(a.front().ordering == Ordering::Random);
  CHECK(a.front().arity == 2);
  CHECK(a.back().size == 512);
  CHECK(a.back().ordering == Ordering::Reversed);
  CHECK(a.back().arity == 8);
  CHECK(a == b);
}

TEST_CASE("run reports per-row errors and writes files") {
  auto spec = small_spec();
  spec.sizes = {16, 64};
  spec.hw_config.capacity = 32;
  spec.output_dir = std::filesystem::path(KHEAP_TEST_TMP) / "run_errors";
  std::filesystem::remove_all(spec.output_dir);
  const auto rows = run(spec);
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].error.has_value());
  REQUIRE(rows[1].error.has_value());
  CHECK(rows[1].error->find("capacity") != std::string::npos);

  CHECK(load_csv(spec.output_dir / "results.csv").size() == 1);
  CHECK(std::filesystem::exists(spec.output_dir / "results.md"));
  CHECK(slurp(spec.output_dir / "errors.txt").find("64,random,4") == 0);
}

TEST_CASE("run validates the spec") {
  auto spec = small_spec();
  spec.arities = {6};
  CHECK_THROWS_AS(run(spec), ConfigError);
  spec = small_spec();
  spec.sizes.clear();
  CHECK_THROWS_AS(run(spec), ArgumentError);
  spec = small_spec();
  spec.repetitions = 0;
  CHECK_THROWS_AS(run(spec), ArgumentError);
}

TEST_CASE("parse_experiment") {
  const auto spec = parse_experiment(KeyValues::parse(
      "sizes = 4096, 8192\n"
      "orderings = random, sorted\n"
      "arities = 2, 16\n"
      "repetitions = 3\n"
      "cooldown_ms = 0\n"
      "seed = 9\n"
      "clock_mhz = 50\n"
      "capacity = 10000\n"
      "cost.swap = 4\n"
      "hw_power.model = affine\n"
      "hw_power.base_watts = 0.1\n"
      "hw_power.watts_per_k = 0.001\n"));
  CHECK(spec.sizes == std::vector<std::size_t>{4096, 8192});
  CHECK(spec.orderings == std::vector<Ordering>{Ordering::Random, Ordering::Sorted});
  CHECK(spec.arities == std::vector<std::size_t>{2, 16});
  CHECK(spec.repetitions == 3);
  CHECK(spec.cooldown_ms == 0);
  CHECK(spec.seed == 9);
  CHECK(spec.hw_config.clock_hz == 50e6);
  CHECK(spec.hw_config.capacity == 10000);
  CHECK(spec.hw_config.cost.swap_cycles == 4);
  CHECK(spec.hw_config.cost.child_read_cycles == 1);
  CHECK(std::holds_alternative<AffineInArity>(spec.hw_power_model));
  CHECK(std::holds_alternative<ConstantPower>(spec.sw_power_model));

  const CycleCostModel m{3, 2, 4, 1, 5, 2};
  CHECK(parse_cost_model(cost_model_to_key_values(m)) == m);
  CHECK_THROWS_AS(parse_cost_model(KeyValues::parse("cost.swap = 0")), ConfigError);
}

TEST_CASE("fit_complexity") {
  SUBCASE("exact n log_k n data") {
    for (std::size_t k : {2, 16}) {
      std::vector<ResultRow> rows;
      for (std::size_t n : {1000, 2000, 4000, 8000}) {
        const double x = static_cast<double>(n) * std::log(static_cast<double>(n)) /
                         std::log(static_cast<double>(k));
        rows.push_back(row_with(n, k, static_cast<std::uint64_t>(std::llround(7.0 * x))));
      }
      const auto fit = fit_complexity(rows, k);
      CHECK(fit.coefficient == doctest::Approx(7.0).epsilon(1e-5));
      CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  SUBCASE("cycles independent of n") {
    std::vector<ResultRow> rows;
    for (std::size_t n : {1000, 2000, 4000, 8000}) rows.push_back(row_with(n, 2, 5000));
    CHECK(fit_complexity(rows, 2).r_squared == doctest::Approx(0.0));
  }
  SUBCASE("too few points or mixed orderings") {
    std::vector<ResultRow> rows{row_with(100, 2, 10), row_with(200, 2, 20), row_with(300, 4, 30)};
    CHECK_THROWS_AS(fit_complexity(rows, 2), ArgumentError);
    rows.push_back(row_with(400, 2, 40));
    rows.back().ordering = Ordering::Sorted;
    CHECK_THROWS_AS(fit_complexity(rows, 2), ArgumentError);
  }
}

TEST_CASE("argmin arities") {
  SUBCASE("two arities") {
    const std::vector<ResultRow> rows{row_with(100, 4, 10, 1.0e-3), row_with(100, 8, 10, 2.0e-3)};
    CHECK(argmin_energy_arity(rows) == 4);
  }
  SUBCASE("U-shaped energy with its minimum at 16") {
    std::vector<ResultRow> rows;
    for (std::size_t k = 2; k <= 128; k *= 2) {
      const double d = std::log2(static_cast<double>(k)) - 4.0;
      rows.push_back(row_with(1000, k, 100, 1.0 + d * d));
    }
    CHECK(argmin_energy_arity(rows) == 16);
  }
  SUBCASE("monotone decreasing") {
    std::vector<ResultRow> rows;
    for (std::size_t k = 2; k <= 128; k *= 2) {
      rows.push_back(row_with(1000, k, 1000 / k, 1.0 / static_cast<double>(k)));
    }
    CHECK(argmin_energy_arity(rows) == 128);
    CHECK(argmin_time_arity(rows) == 128);
  }
  SUBCASE("single arity and ties") {
    CHECK(argmin_time_arity(std::vector<ResultRow>{row_with(10, 32, 77)}) == 32);
    const std::vector<ResultRow> tie{row_with(10, 64, 50), row_with(10, 8, 50), row_with(10, 16, 60)};
    CHECK(argmin_time_arity(tie) == 8);
  }
  SUBCASE("invalid input") {
    CHECK_THROWS_AS(argmin_time_arity({}), ArgumentError);
    const std::vector<ResultRow> mixed{row_with(10, 2, 5), row_with(20, 4, 5)};
    CHECK_THROWS_AS(argmin_energy_arity(mixed), ArgumentError);
  }
  SUBCASE("default cost model sweep at n = 16384") {
    ExperimentSpec spec = small_spec();
    spec.sizes = {16384};
    spec.arities = {2, 4, 8, 16, 32, 64, 128};
    const auto rows = run(spec, stepping_clock(1e-3));
    CHECK(argmin_time_arity(rows) == 128);
  }
}
