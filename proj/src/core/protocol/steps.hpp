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

#include <optional>
#include <span>
#include <vector>

#include "engine/register.hpp"
#include "protocol/transcript.hpp"
#include "protocol/types.hpp"
#include "rng.hpp"

namespace semiq::protocol {

/// Chooses exactly n/2 positions to measure, uniformly, and an independent
/// uniform order for the retained ones. z_results is left empty.
PartyState party_step2(StreamRng& rng, std::uint32_t n, Role role = Role::Alice);

/// Z-measures the party's chosen positions on its wire and records the bits.
void party_measure(engine::Register& reg, std::span<const QubitId> wire, PartyState& party);

/// Prepares n PhiPlus pairs: pair i is (a[i], b[i]) = (qubit i, qubit n + i).
/// Throws CapacityError if the register holds fewer than 2n qubits.
Wires tp_step1(engine::Register& reg, std::uint32_t n);

/// Bell-measures (q1[k], q2[k]) for ascending k.
MRAnnouncement tp_step3_honest(engine::Register& reg, std::span<const QubitId> q1,
                               std::span<const QubitId> q2);

/// Decomposes the pairing graph. measured_* are the sets each party
/// Z-measured; order_* map slot -> retained position. Throws
/// std::invalid_argument if the orders are not permutations of the retained
/// positions or the sets have the wrong size.
Classification classify_components(std::span<const Position> measured_a, std::span<const Position> measured_b,
                                   std::span<const Position> order_a, std::span<const Position> order_b,
                                   std::uint32_t n);

struct ComponentVerdict {
  std::uint32_t component = 0;
  ComponentKind kind = ComponentKind::Cycle;
  Group group = Group::OriginalPair;
  std::uint32_t length = 0;
  bool checked = false;  // Case 3 chains carry no check
  bool passed = true;
};

struct Step4Result {
  std::vector<ComponentVerdict> verdicts;   // one per component, same order
  std::vector<Case4Disclose> disclosures;   // Alice's then Bob's, per chain
  std::vector<Bit> raw_alice;
  std::vector<Bit> raw_bob;
  std::optional<AbortInfo> abort;           // first failing component

  std::size_t case1_bits = 0;
  std::size_t case3_bits = 0;
};

/// Runs every Case 1-4 rule. Each party evaluates the checks from public data
/// plus its own bits; the two verdict lists must agree (std::logic_error
/// otherwise). Aborting is a result, not an error.
Step4Result evaluate_step4(const Classification& classification, const MRAnnouncement& mr,
                           const PartyState& alice, const PartyState& bob);

/// What an outside observer can verify from a serialized transcript alone.
struct PublicVerdict {
  Classification classification;
  std::vector<ComponentVerdict> verdicts;
  std::optional<AbortInfo> computed_abort;
  std::optional<AbortInfo> recorded_abort;
  bool consistent = false;  // recomputed verdict matches the recorded outcome
};

/// Throws std::invalid_argument if required records are missing.
PublicVerdict verify_transcript(const Transcript& transcript);

}  // namespace semiq::protocol
