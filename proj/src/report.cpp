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

#include "kheap/report.hpp"

#include <cstdio>
#include <fstream>
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "kheap/errors.hpp"

namespace kheap {

ReportFormat parse_report_format(std::string_view s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "markdown") return ReportFormat::Markdown;
  if (s == "plotdata") return ReportFormat::PlotData;
  throw ArgumentError("unknown report format '" + std::string(s) + "'");
}

std::string to_csv(std::span<const ResultRow> rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    if (r.error) continue;
    out += std::to_string(r.size) + ',' + std::string(to_string(r.ordering)) + ',' +
           std::to_string(r.arity) + ',' + format_double(r.sw_time_s) + ',' +
           format_double(r.sw_time_stddev) + ',' + std::to_string(r.hw_cycles) + ',' +
           format_double(r.hw_time_s) + ',' + format_double(r.sw_energy_j) + ',' +
           format_double(r.hw_energy_j) + ',' + format_double(r.time_ratio) + ',' +
           format_double(r.energy_ratio) + '\n';
  }
  return out;
}

std::vector<ResultRow> parse_csv(std::string_view text) {
  std::vector<ResultRow> rows;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw ArgumentError("unexpected CSV header: " + std::string(line));
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> f;
    while (true) {
      const auto comma = line.find(',');
      f.push_back(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    if (f.size() != 11) {
      throw ArgumentError("CSV line " + std::to_string(line_no) + ": expected 11 fields");
    }
    ResultRow r;
    r.size = parse_uint(f[0]);
    r.ordering = parse_ordering(f[1]);
    r.arity = parse_uint(f[2]);
    r.sw_time_s = parse_double(f[3]);
    r.sw_time_stddev = parse_double(f[4]);
    r.hw_cycles = parse_uint(f[5]);
    r.hw_time_s = parse_double(f[6]);
    r.sw_energy_j = parse_double(f[7]);
    r.hw_energy_j = parse_double(f[8]);
    r.time_ratio = parse_double(f[9]);
    r.energy_ratio = parse_double(f[10]);
    rows.push_back(r);
  }
  if (!header_seen) throw ArgumentError("CSV is empty");
  return rows;
}

std::vector<ResultRow> load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_csv(text.str());
}


namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> f;
  while (true) {
    const auto comma = line.find(',');
    f.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line = line.substr(comma + 1);
  }
  return f;
}

}  // namespace

std::vector<ReferencePoint> parse_reference_csv(std::string_view text) {
  std::vector<ReferencePoint> points;
  std::optional<std::size_t> size_col;
  std::optional<std::size_t> time_col;
  double scale = 1.0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (!header_seen) {
      header_seen = true;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "size") size_col = i;
        if (fields[i] == "seconds") {
          time_col = i;
          scale = 1.0;
        } else if (fields[i] == "fpga_time_ms" && !time_col) {
          time_col = i;
          scale = 1e-3;
        }
      }
      if (!size_col || !time_col) {
        throw ArgumentError("reference CSV needs 'size' and 'seconds' or 'fpga_time_ms' columns");
      }
      continue;
    }
    if (fields.size() <= std::max(*size_col, *time_col)) {
      throw ArgumentError("reference CSV row has too few fields");
    }
    points.push_back({parse_uint(fields[*size_col]), parse_double(fields[*time_col]) * scale});
  }
  if (points.empty()) throw ArgumentError("reference CSV has no data rows");
  return points;
}

std::vector<ReferencePoint> load_reference_csv(const std::filesystem::path& path) {
  return parse_reference_csv(read_file(path));
}

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::string to_markdown(std::span<const ResultRow> rows) {
  std::string out =
      "| Size | Ordering | k | SW time (ms) | HW time (ms) | SW energy (mJ) | HW energy (mJ) "
      "| Time improvement | Energy improvement |\n"
      "|---:|:---|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& r : rows) {
    if (r.error) continue;
    out += "| " + std::to_string(r.size) + " | " + std::string(to_string(r.ordering)) + " | " +
           std::to_string(r.arity) + " | " + fixed(r.sw_time_s * 1e3, 3) + " | " +
           fixed(r.hw_time_s * 1e3, 3) + " | " + fixed(r.sw_energy_j * 1e3, 3) + " | " +
           fixed(r.hw_energy_j * 1e3, 3) + " | " + fixed(r.time_ratio, 3) + " | " +
           fixed(r.energy_ratio, 3) + " |\n";
  }
  return out;
}

std::vector<PlotSeries> plot_series(std::span<const ResultRow> rows) {
  using SizeKey = std::pair<Ordering, std::size_t>;
  std::map<SizeKey, std::map<std::size_t, const ResultRow*>> by_arity;  // (ordering, k) -> size
  std::map<SizeKey, std::map<std::size_t, const ResultRow*>> by_size;   // (ordering, n) -> k
  for (const auto& r : rows) {
    if (r.error) continue;
    by_arity[{r.ordering, r.arity}][r.size] = &r;
    by_size[{r.ordering, r.size}][r.arity] = &r;
  }

  std::vector<PlotSeries> out;
  for (const auto& [key, series] : by_arity) {
    if (series.size() < 2) continue;
    const std::string suffix = std::string(to_string(key.first)) + "_k" + std::to_string(key.second);
    PlotSeries hw{"hw_energy_vs_size_" + suffix, "size", {}};
    PlotSeries sw{"sw_energy_vs_size_" + suffix, "size", {}};
    for (const auto& [n, row] : series) {
      hw.points.emplace_back(static_cast<double>(n), row->hw_energy_j);
      sw.points.emplace_back(static_cast<double>(n), row->sw_energy_j);
    }
    out.push_back(std::move(hw));
    out.push_back(std::move(sw));
  }
  for (const auto& [key, series] : by_size) {
    if (series.size() < 2) continue;
    PlotSeries hw{"hw_energy_vs_arity_" + std::string(to_string(key.first)) + "_n" +
                      std::to_string(key.second),
                  "arity",
                  {}};
    for (const auto& [k, row] : series) hw.points.emplace_back(static_cast<double>(k), row->hw_energy_j);
    out.push_back(std::move(hw));
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::vector<std::filesystem::path> emit_report(std::span<const ResultRow> rows, ReportFormat format,
                                               const std::filesystem::path& out) {
  bool any = false;
  for (const auto& r : rows) any = any || !r.error;
  if (!any) throw ArgumentError("emit_report: no rows to report");

  switch (format) {
    case ReportFormat::Csv:
      write_file(out, to_csv(rows));
      return {out};
    case ReportFormat::Markdown:
      write_file(out, to_markdown(rows));
      return {out};
    case ReportFormat::PlotData: {
      std::error_code ec;
      std::filesystem::create_directories(out, ec);
      if (ec) throw IoError("cannot create " + out.string() + ": " + ec.message());
      std::vector<std::filesystem::path> written;
      for (const auto& s : plot_series(rows)) {
        std::string text = "# " + s.x_label + " energy_j\n";
        for (const auto& [x, y] : s.points) text += format_double(x) + ' ' + format_double(y) + '\n';
        const auto path = out / (s.name + ".dat");
        write_file(path, text);
        written.push_back(path);
      }
      return written;
    }
  }
  return {};
}

}  // namespace kheap
