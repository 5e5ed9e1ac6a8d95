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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "adversary/strategy.hpp"
#include "protocol/run.hpp"

namespace semiq::harness {

struct CampaignConfig {
  std::uint32_t n = 64;
  std::uint64_t trials = 100;
  adversary::TpStrategy strategy = adversary::TpStrategy::honest();
  std::uint64_t master_seed = 1;
  engine::Backend backend = engine::Backend::Tableau;
  pa::Ratio pa_ratio{1, 2};
  unsigned threads = 0;  // 0: one per hardware thread
};

/// Pass counts for one (kind, length) bucket of checked components.
struct ComponentTally {
  protocol::ComponentKind kind = protocol::ComponentKind::Cycle;
  std::uint32_t length = 0;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
};

struct Summary {
  std::uint64_t trials = 0;
  std::uint64_t completed = 0;
  std::uint64_t aborted = 0;
  std::uint64_t mismatched = 0;  // completed trials whose keys differ
  double detection_rate = 0.0;   // aborted / trials
  double mismatch_rate = 0.0;    // mismatched / completed
  double mean_raw_key = 0.0;     // over completed trials
  double raw_key_stderr = 0.0;
  double mean_final_key = 0.0;
  double qubit_efficiency = 0.0;  // mean_raw_key / (2n)
  double qubit_efficiency_stderr = 0.0;
};

struct CampaignResult {
  std::vector<protocol::RunStats> trials;  // ordered by trial id
  Summary summary;
  std::vector<ComponentTally> tallies;     // sorted by (kind, length)
};

/// Seed of trial `index`; independent of how trials are scheduled.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index);

/// Runs every trial (in parallel when threads != 1). The result does not
/// depend on the thread count.
CampaignResult run_campaign(const CampaignConfig& config);

Summary summarize(std::span<const protocol::RunStats> trials, std::uint32_t n);
std::vector<ComponentTally> tally_components(std::span<const protocol::RunStats> trials);

/// Header row plus one row per trial, LF line endings. The elapsed_ms column
/// is always present but left empty unless include_timing is set, so output
/// stays byte-identical across runs by default.
void write_csv(std::ostream& out, std::span<const protocol::RunStats> trials, bool include_timing = false);
/// Throws IoError naming the path on failure.
void emit_csv(std::span<const protocol::RunStats> trials, const std::string& path, bool include_timing = false);

std::string format_summary(const Summary& s);

}  // namespace semiq::harness
