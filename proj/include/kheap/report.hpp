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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kheap/bench.hpp"

namespace kheap {

enum class ReportFormat { Csv, Markdown, PlotData };

ReportFormat parse_report_format(std::string_view s);

inline constexpr std::string_view kCsvHeader =
    "size,ordering,arity,sw_time_s,sw_time_stddev,hw_cycles,hw_time_s,sw_energy_j,hw_energy_j,"
    "time_ratio,energy_ratio";

/// LF line endings, shortest round-trip decimal form. Rows carrying an
/// error are skipped.
std::string to_csv(std::span<const ResultRow> rows);
std::vector<ResultRow> parse_csv(std::string_view text);
std::vector<ResultRow> load_csv(const std::filesystem::path& path);

/// Reference timings for calibrate. Needs a `size` column and either a
/// `seconds` column or an `fpga_time_ms` column (the reference fixture layout).
std::vector<ReferencePoint> parse_reference_csv(std::string_view text);
std::vector<ReferencePoint> load_reference_csv(const std::filesystem::path& path);

std::string to_markdown(std::span<const ResultRow> rows);

struct PlotSeries {
  std::string name;  // file stem
  std::string x_label;
  std::vector<std::pair<double, double>> points;
};

/// Energy series with at least two points: hardware and software energy
/// against size per (ordering, arity), and hardware energy against arity per
/// (ordering, size). x is increasing.
std::vector<PlotSeries> plot_series(std::span<const ResultRow> rows);

/// csv and markdown write the file `out`; plotdata writes one
/// `<name>.dat` per series into directory `out`. Returns the paths written.
std::vector<std::filesystem::path> emit_report(std::span<const ResultRow> rows, ReportFormat format,
                                               const std::filesystem::path& out);

}  // namespace kheap
