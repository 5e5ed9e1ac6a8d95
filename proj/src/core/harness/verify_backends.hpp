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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "engine/register.hpp"

namespace semiq::harness {

/// A scripted circuit: state preparation followed by a measurement plan, and
/// optionally the Bell-algebra relation every outcome must satisfy.
struct ScriptedCircuit {
  std::string name;
  std::size_t qubits = 0;
  std::function<void(engine::Register&)> prepare;
  engine::MeasurementPlan plan;
  std::function<bool(const engine::Outcome&)> relation;  // may be empty
};

/// Crossed swaps, cycles and chains up to 5 pairs (plus longer ones when
/// they fit), each gate on one half of a PhiPlus pair, and trivial circuits.
/// Only circuits with at most max_qubits qubits are returned.
std::vector<ScriptedCircuit> scripted_circuits(std::size_t max_qubits, std::uint64_t seed);

/// Executes the circuit once on a fresh register and returns its outcome.
engine::Outcome sample_circuit(const ScriptedCircuit& c, engine::Backend backend, std::uint64_t seed);

struct GoodnessOfFit {
  double chi_square = 0.0;
  std::uint32_t dof = 0;
  double p_value = 1.0;
  std::uint64_t impossible = 0;  // samples outside the exact support
  bool pass = false;
};

/// Pearson chi-square of observed counts against exact probabilities. Bins
/// with expected count below 5 are pooled. Fails on any sample outside the
/// support or when p < alpha.
GoodnessOfFit chi_square_test(const engine::OutcomeDistribution& exact,
                              const std::map<engine::Outcome, std::uint64_t>& observed, double alpha);

struct CircuitReport {
  std::string name;
  std::size_t qubits = 0;
  std::size_t support = 0;
  std::uint64_t samples = 0;
  GoodnessOfFit dense;
  GoodnessOfFit tableau;
  bool relation_checked = false;
  std::uint64_t relation_violations = 0;  // over exact support and all samples
  bool pass = false;
};

struct VerifyReport {
  std::vector<CircuitReport> circuits;
  double alpha = 0.001;
  bool pass = false;
};

/// Throws CapacityError if max_qubits exceeds the dense cap.
VerifyReport verify_backends(std::size_t max_qubits, std::uint64_t samples, std::uint64_t seed = 1,
                             double alpha = 0.001);

std::string format_report(const VerifyReport& report);

}  // namespace semiq::harness
