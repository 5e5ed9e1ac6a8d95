// Copyright 2026 The semiq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "engine/register.hpp"
#include "protocol/run.hpp"

namespace semiq::harness {

/// 1 - (21/32)^t: aggregate detection of the Z-measuring third party after t
/// key bits, as reported alongside the measured rates.
double measurement_attack_curve(std::uint32_t t);
/// 1 - (1/2)^m for m modified qubits.
double modification_attack_curve(std::uint32_t m);

struct CurveRow {
  std::uint32_t x = 0;
  double measurement = 0.0;
  double modification = 0.0;
  // Empirical columns; negative when not measured.
  double measurement_empirical = -1.0;
  std::uint64_t measurement_trials = 0;
  double modification_empirical = -1.0;
  std::uint64_t modification_trials = 0;
};

/// Analytic rows for x in [first, last]. Throws std::invalid_argument if
/// first > last.
std::vector<CurveRow> analytic_curves(std::uint32_t first, std::uint32_t last);

/// Naive-measurement trials grouped by t = case1_bits + case3_bits:
/// t -> (aborted, total).
std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> detection_by_key_bits(
    std::span<const protocol::RunStats> trials);

struct EmpiricalCurveConfig {
  std::uint32_t n = 256;
  std::uint64_t trials = 1000;  // per modification campaign, and for the naive campaign
  std::uint64_t master_seed = 1;
  engine::Backend backend = engine::Backend::Tableau;
  engine::Gate gate = engine::Gate::X;
  unsigned threads = 0;
};

/// Fills the empirical columns: one modification campaign per row with
/// m = x <= n, and one naive-measurement campaign binned by key bits.
void add_empirical(std::vector<CurveRow>& rows, const EmpiricalCurveConfig& config);

/// CSV with header x,measurement_curve,measurement_empirical,
/// measurement_trials,modification_curve,modification_empirical,
/// modification_trials. Unmeasured cells are empty.
std::string format_curves_csv(std::span<const CurveRow> rows);

}  // namespace semiq::harness
