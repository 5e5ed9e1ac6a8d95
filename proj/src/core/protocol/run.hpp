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
#include <optional>
#include <string>
#include <vector>

#include "adversary/strategy.hpp"
#include "engine/register.hpp"
#include "privacy_amp.hpp"
#include "protocol/steps.hpp"
#include "protocol/transcript.hpp"

namespace semiq::protocol {

struct ProtocolConfig {
  std::uint32_t n = 64;  // Bell pairs; positive and even
  std::uint64_t seed = 1;
  engine::Backend backend = engine::Backend::Tableau;
  pa::Ratio pa_ratio{1, 2};
};

enum class Status : std::uint8_t { Completed, Aborted };
std::string_view to_string(Status s);

struct Outcome {
  Status status = Status::Completed;
  std::vector<Bit> raw_alice;
  std::vector<Bit> raw_bob;
  std::vector<Bit> key_alice;  // after privacy amplification
  std::vector<Bit> key_bob;
  std::optional<AbortInfo> abort;
};

/// Per-trial record. Counts describe the classification and are filled for
/// aborted trials too; raw/final key lengths and keys_match only mean
/// something when the trial completed.
struct RunStats {
  std::uint64_t trial_id = 0;
  std::uint32_t n = 0;
  std::string strategy;
  Status status = Status::Completed;
  std::optional<AbortInfo> abort;
  std::uint32_t raw_key_len = 0;
  std::uint32_t final_key_len = 0;
  bool keys_match = false;
  std::uint32_t case1_bits = 0;
  std::uint32_t case3_bits = 0;
  std::uint32_t case4_disclosed_bits = 0;
  std::uint32_t cycle_components = 0;
  std::uint32_t chain_components = 0;
  std::uint64_t qubit_total = 0;
  double elapsed_ms = 0.0;

  std::uint32_t cycle_checks_passed = 0;
  std::uint32_t chain_checks = 0;  // Case 4 chains
  std::uint32_t chain_checks_passed = 0;
  std::uint32_t attacked_qubits = 0;
  std::uint32_t attacked_case1 = 0;      // attacked positions both parties measured
  std::uint32_t attacked_endpoints = 0;  // attacked positions only Alice measured
  std::uint32_t attacked_case4 = 0;      // ... of which sit on a Case 4 chain
  std::uint32_t tp_known_case3_bits = 0;

  std::vector<ComponentVerdict> components;
};

struct RunResult {
  Outcome outcome;
  Transcript transcript;
  RunStats stats;
};

/// One complete run. All randomness derives from config.seed: the register
/// uses stream 0, Alice 1, Bob 2 and the third party 3.
RunResult run_protocol(const ProtocolConfig& config, const adversary::TpStrategy& strategy,
                       std::uint64_t trial_id = 0);

}  // namespace semiq::protocol
