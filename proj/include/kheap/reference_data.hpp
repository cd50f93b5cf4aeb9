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

namespace kheap::reference {

/// Published k = 2, random-order measurements: Raspberry Pi 4 software runs
/// against the FPGA heap at 100 MHz, with the printed improvement ratios.
struct ReferenceRun {
  std::size_t size;
  double pi_time_ms;
  double fpga_time_ms;
  double pi_energy_mj;
  double fpga_energy_mj;
  double time_improvement;
  double energy_improvement;
};

inline constexpr std::array<ReferenceRun, 7> kReferenceRuns = {{
    {4096, 8.001, 5.386, 27.27, 0.522, 1.486, 52.241},
    {6144, 9.263, 8.479, 31.824, 1.085, 1.092, 29.331},
    {8192, 10.696, 11.665, 37.015, 1.271, 0.917, 29.123},
    {10240, 12.023, 14.963, 41.17, 2.574, 0.804, 15.995},
    {12288, 13.137, 18.322, 45.148, 3.023, 0.717, 14.935},
    {14336, 14.604, 21.737, 49.678, 3.521, 0.672, 14.109},
    {16384, 15.749, 25.138, 53.39, 3.343, 0.627, 15.971},
}};

inline constexpr double kFpgaClockHz = 100'000'000.0;

}  // namespace kheap::reference
