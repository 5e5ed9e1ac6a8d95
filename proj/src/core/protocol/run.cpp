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

#include "protocol/run.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace semiq::protocol {

namespace {

enum Stream : std::uint64_t { kRegisterStream = 0, kAliceStream = 1, kBobStream = 2, kTpStream = 3 };

std::vector<QubitId> returned_sequence(const std::vector<QubitId>& wire, const std::vector<Position>& order) {
  std::vector<QubitId> out;
  out.reserve(order.size());
  for (Position p : order) out.push_back(wire[p]);
  return out;
}

void fill_stats(RunStats& s, const Classification& cls, const Step4Result& step4, const PartyState& alice,
                const PartyState& bob, const TpBehavior& tp) {
  s.case1_bits = static_cast<std::uint32_t>(step4.case1_bits);
  s.case3_bits = static_cast<std::uint32_t>(step4.case3_bits);
  s.case4_disclosed_bits = static_cast<std::uint32_t>(step4.disclosures.size());
  s.components = step4.verdicts;
  for (const auto& v : step4.verdicts) {
    if (v.kind == ComponentKind::Cycle) {
      ++s.cycle_components;
      s.cycle_checks_passed += v.passed ? 1 : 0;
    } else {
      ++s.chain_components;
      if (v.checked) {
        ++s.chain_checks;
        s.chain_checks_passed += v.passed ? 1 : 0;
      }
    }
  }

  const auto attacked = tp.attacked_positions();
  s.attacked_qubits = static_cast<std::uint32_t>(attacked.size());
  for (Position p : attacked) {
    const bool by_alice = alice.z_results.count(p) != 0;
    const bool by_bob = bob.z_results.count(p) != 0;
    if (by_alice && by_bob) {
      ++s.attacked_case1;
    } else if (by_alice) {
      ++s.attacked_endpoints;
      for (const auto& c : cls.components) {
        if (c.kind == ComponentKind::Chain && c.alice_endpoint == p && c.length() >= 2) ++s.attacked_case4;
      }
    }
  }

  // The collapsed partner of Alice's Case 3 bit is the Q2 qubit of the slot,
  // which a measuring TP has already read.
  const auto recorded = tp.recorded_z();
  if (!recorded.empty()) {
    for (const auto& c : cls.components) {
      if (c.group() != Group::CollapsedPair) continue;
      if (recorded[c.slots[0]].second == alice.z_results.at(c.alice_endpoint)) ++s.tp_known_case3_bits;
    }
  }
}

}  // namespace

std::string_view to_string(Status s) { return s == Status::Completed ? "COMPLETED" : "ABORTED"; }

RunResult run_protocol(const ProtocolConfig& config, const adversary::TpStrategy& strategy, std::uint64_t trial_id) {
  const auto started = std::chrono::steady_clock::now();
  const std::uint32_t n = config.n;
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("n must be an even number >= 2, got " + std::to_string(n));
  }
  if (!config.pa_ratio.valid()) {
    throw std::invalid_argument("privacy amplification ratio must lie in (0, 1]");
  }

  RunResult result;
  Transcript& transcript = result.transcript;
  engine::Register reg(2 * static_cast<std::size_t>(n), config.backend, config.seed, kRegisterStream);
  StreamRng alice_rng(config.seed, kAliceStream);
  StreamRng bob_rng(config.seed, kBobStream);
  auto tp = strategy.instantiate(n, StreamRng(config.seed, kTpStream));

  // Step 1
  const Wires wires = tp->prepare(reg, n);
  if (wires.a.size() != n || wires.b.size() != n) {
    throw std::logic_error("third party prepared the wrong number of qubits");
  }
  tp->on_outbound(reg, wires);
  transcript.append(QuantumSend{Party::Tp, Party::Alice, n});
  transcript.append(QuantumSend{Party::Tp, Party::Bob, n});

  // Step 2
  PartyState alice = party_step2(alice_rng, n, Role::Alice);
  PartyState bob = party_step2(bob_rng, n, Role::Bob);
  party_measure(reg, wires.a, alice);
  party_measure(reg, wires.b, bob);
  transcript.append(QuantumSend{Party::Alice, Party::Tp, n / 2});
  transcript.append(QuantumSend{Party::Bob, Party::Tp, n / 2});

  // Step 3: the announcement is committed before any order is public.
  const auto q1 = returned_sequence(wires.a, alice.send_order);
  const auto q2 = returned_sequence(wires.b, bob.send_order);
  MRAnnouncement mr = tp->on_return(reg, q1, q2);
  if (mr.results.size() != n / 2) {
    throw std::logic_error("third party announced the wrong number of results");
  }
  transcript.append(MrAnnounce{mr});

  // Step 4
  transcript.append(OrderAnnounce{Role::Alice, alice.send_order, alice.measured_positions});
  transcript.append(OrderAnnounce{Role::Bob, bob.send_order, bob.measured_positions});
  tp->on_orders_revealed(transcript);

  const Classification cls =
      classify_components(alice.measured_positions, bob.measured_positions, alice.send_order, bob.send_order, n);
  const Step4Result step4 = evaluate_step4(cls, transcript.mr_announce()->mr, alice, bob);
  for (const auto& d : step4.disclosures) transcript.append(d);

  Outcome& outcome = result.outcome;
  outcome.raw_alice = step4.raw_alice;
  outcome.raw_bob = step4.raw_bob;
  if (step4.abort) {
    outcome.status = Status::Aborted;
    outcome.abort = step4.abort;
    transcript.append(AbortRecord{*step4.abort});
  } else {
    // Step 5
    const auto params = pa::PAParams::random(config.pa_ratio, outcome.raw_alice.size(), alice_rng);
    transcript.append(PaSeed{params.ratio, static_cast<std::uint32_t>(params.input_len), params.seed_bits});
    outcome.key_alice = pa::amplify(outcome.raw_alice, params);
    outcome.key_bob = pa::amplify(outcome.raw_bob, params);
  }

  RunStats& s = result.stats;
  s.trial_id = trial_id;
  s.n = n;
  s.strategy = strategy.descriptor();
  s.status = outcome.status;
  s.abort = outcome.abort;
  s.qubit_total = 2ULL * n;
  if (outcome.status == Status::Completed) {
    s.raw_key_len = static_cast<std::uint32_t>(outcome.raw_alice.size());
    s.final_key_len = static_cast<std::uint32_t>(outcome.key_alice.size());
    s.keys_match = outcome.raw_alice == outcome.raw_bob && outcome.key_alice == outcome.key_bob;
  }
  fill_stats(s, cls, step4, alice, bob, *tp);
  s.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace semiq::protocol
