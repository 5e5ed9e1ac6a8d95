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

#include "protocol/steps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace semiq::protocol {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

// Public information a party needs to evaluate the checks.
struct CheckInput {
  const Classification& classification;
  const MRAnnouncement& mr;
};

std::vector<BellType> results_for(const MRAnnouncement& mr, const Component& c) {
  std::vector<BellType> out;
  out.reserve(c.slots.size());
  for (Slot s : c.slots) out.push_back(mr.results[s]);
  return out;
}

// The checks as seen by one party. `alice_bit` / `bob_bit` return the chain
// endpoint bits available to that party (own or disclosed).
template <class AliceBit, class BobBit>
std::vector<ComponentVerdict> run_checks(const CheckInput& in, AliceBit alice_bit, BobBit bob_bit) {
  std::vector<ComponentVerdict> verdicts;
  verdicts.reserve(in.classification.components.size());
  for (std::uint32_t i = 0; i < in.classification.components.size(); ++i) {
    const Component& c = in.classification.components[i];
    ComponentVerdict v{i, c.kind, c.group(), static_cast<std::uint32_t>(c.length()), false, true};
    const auto results = results_for(in.mr, c);
    if (c.kind == ComponentKind::Cycle) {
      const std::vector<BellType> initials(c.length(), BellType::PhiPlus);
      v.checked = true;
      v.passed = bell::xor_rule_holds(initials, results);
    } else if (c.length() >= 2) {
      bell::ChainSpec spec;
      spec.is1 = BellType::PhiPlus;
      spec.is2 = BellType::PhiPlus;
      spec.intermediates.assign(c.pairs.size(), BellType::PhiPlus);
      spec.zmr1 = alice_bit(c.alice_endpoint);
      spec.zmr2 = bob_bit(c.bob_endpoint);
      spec.mrs = results;
      v.checked = true;
      v.passed = bell::chain_relation_holds(spec);
    }
    verdicts.push_back(v);
  }
  return verdicts;
}

std::optional<AbortInfo> first_failure(const std::vector<ComponentVerdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (v.checked && !v.passed) {
      return AbortInfo{v.kind == ComponentKind::Cycle ? AbortStage::Case2 : AbortStage::Case4, v.component,
                       v.kind};
    }
  }
  return std::nullopt;
}

bool same_verdicts(const std::vector<ComponentVerdict>& a, const std::vector<ComponentVerdict>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].checked != b[i].checked || a[i].passed != b[i].passed) return false;
  }
  return true;
}

void validate_measured(std::span<const Position> measured, std::uint32_t n, std::vector<char>& mask,
                       const char* who) {
  if (measured.size() != n / 2) {
    throw std::invalid_argument(std::string(who) + " must have measured exactly n/2 positions");
  }
  for (Position p : measured) {
    if (p >= n || mask[p]) {
      throw std::invalid_argument(std::string(who) + " measured set has an invalid or repeated position");
    }
    mask[p] = 1;
  }
}

std::vector<std::uint32_t> invert_order(std::span<const Position> order, const std::vector<char>& measured,
                                        std::uint32_t n, const char* who) {
  if (order.size() != n / 2) {
    throw std::invalid_argument(std::string(who) + " order must list exactly n/2 positions");
  }
  std::vector<std::uint32_t> inv(n, kNone);
  for (std::uint32_t k = 0; k < order.size(); ++k) {
    const Position p = order[k];
    if (p >= n || measured[p] || inv[p] != kNone) {
      throw std::invalid_argument(std::string(who) + " order is not a permutation of the retained positions");
    }
    inv[p] = k;
  }
  return inv;
}

}  // namespace

std::string_view to_string(Role r) { return r == Role::Alice ? "ALICE" : "BOB"; }

std::string_view to_string(ComponentKind k) { return k == ComponentKind::Cycle ? "CYCLE" : "CHAIN"; }

std::string_view to_string(AbortStage s) { return s == AbortStage::Case2 ? "CASE2" : "CASE4"; }

Group Component::group() const {
  if (kind == ComponentKind::Cycle) {
    return slots.size() == 1 ? Group::OriginalPair : Group::Swapping;
  }
  return slots.size() == 1 ? Group::CollapsedPair : Group::CollapsedChain;
}

PartyState party_step2(StreamRng& rng, std::uint32_t n, Role role) {
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("n must be a positive even number, got " + std::to_string(n));
  }
  std::vector<Position> positions(n);
  std::iota(positions.begin(), positions.end(), Position{0});
  rng.shuffle(std::span<Position>(positions));

  PartyState party;
  party.role = role;
  party.measured_positions.assign(positions.begin(), positions.begin() + n / 2);
  std::sort(party.measured_positions.begin(), party.measured_positions.end());
  // Retained positions in ascending order, then an independent shuffle.
  std::vector<char> measured(n, 0);
  for (Position p : party.measured_positions) measured[p] = 1;
  for (Position p = 0; p < n; ++p) {
    if (!measured[p]) party.send_order.push_back(p);
  }
  rng.shuffle(std::span<Position>(party.send_order));
  return party;
}

void party_measure(engine::Register& reg, std::span<const QubitId> wire, PartyState& party) {
  party.z_results.clear();
  for (Position p : party.measured_positions) {
    if (p >= wire.size()) throw std::invalid_argument("measured position outside the wire");
    party.z_results.emplace(p, reg.measure_z(wire[p]));
  }
}

Wires tp_step1(engine::Register& reg, std::uint32_t n) {
  if (reg.size() < 2 * static_cast<std::size_t>(n)) {
    throw CapacityError("register of " + std::to_string(reg.size()) + " qubits cannot hold " + std::to_string(n) +
                        " Bell pairs");
  }
  Wires w;
  w.a.reserve(n);
  w.b.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    w.a.push_back(QubitId{i});
    w.b.push_back(QubitId{n + i});
    reg.prepare_bell_phi_plus(w.a.back(), w.b.back());
  }
  return w;
}

MRAnnouncement tp_step3_honest(engine::Register& reg, std::span<const QubitId> q1, std::span<const QubitId> q2) {
  if (q1.size() != q2.size()) {
    throw std::invalid_argument("returned sequences differ in length");
  }
  MRAnnouncement mr;
  mr.results.reserve(q1.size());
  for (std::size_t k = 0; k < q1.size(); ++k) {
    mr.results.push_back(reg.measure_bell(q1[k], q2[k]));
  }
  return mr;
}

Classification classify_components(std::span<const Position> measured_a, std::span<const Position> measured_b,
                                   std::span<const Position> order_a, std::span<const Position> order_b,
                                   std::uint32_t n) {
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("n must be a positive even number");
  }
  std::vector<char> in_a(n, 0), in_b(n, 0);
  validate_measured(measured_a, n, in_a, "Alice");
  validate_measured(measured_b, n, in_b, "Bob");
  const auto inv_a = invert_order(order_a, in_a, n, "Alice");
  const auto inv_b = invert_order(order_b, in_b, n, "Bob");

  Classification out;
  for (Position p = 0; p < n; ++p) {
    if (in_a[p] && in_b[p]) out.case1_positions.push_back(p);
  }

  const std::uint32_t slots = n / 2;
  std::vector<char> visited(slots, 0);
  auto surviving = [&](Position p) { return !in_a[p] && !in_b[p]; };

  // Chains start at a slot whose Q1 qubit is collapsed (Bob measured its
  // partner) and always leave a slot through its Q2 qubit.
  for (Slot k = 0; k < slots; ++k) {
    if (!in_b[order_a[k]]) continue;
    Component c;
    c.kind = ComponentKind::Chain;
    c.bob_endpoint = order_a[k];
    Slot cur = k;
    while (true) {
      visited[cur] = 1;
      c.slots.push_back(cur);
      const Position p = order_b[cur];
      if (!surviving(p)) {
        c.alice_endpoint = p;
        break;
      }
      c.pairs.push_back(p);
      cur = inv_a[p];
    }
    out.components.push_back(std::move(c));
  }

  for (Slot k = 0; k < slots; ++k) {
    if (visited[k]) continue;
    Component c;
    c.kind = ComponentKind::Cycle;
    Slot cur = k;
    while (true) {
      visited[cur] = 1;
      c.slots.push_back(cur);
      const Position p = order_b[cur];
      c.pairs.push_back(p);
      cur = inv_a[p];
      if (cur == k) break;
    }
    out.components.push_back(std::move(c));
  }

  std::sort(out.components.begin(), out.components.end(), [](const Component& x, const Component& y) {
    return *std::min_element(x.slots.begin(), x.slots.end()) < *std::min_element(y.slots.begin(), y.slots.end());
  });
  return out;
}

Step4Result evaluate_step4(const Classification& classification, const MRAnnouncement& mr,
                           const PartyState& alice, const PartyState& bob) {
  const std::size_t n = alice.n();
  if (mr.results.size() != n / 2) {
    throw std::invalid_argument("MR announcement has the wrong length");
  }
  auto own = [](const PartyState& party, Position p) {
    auto it = party.z_results.find(p);
    if (it == party.z_results.end()) {
      throw std::invalid_argument("party has no Z result at position " + std::to_string(p));
    }
    return it->second;
  };

  Step4Result r;
  // Case 4: each party discloses its own endpoint bit.
  std::map<Position, Bit> disclosed_by_alice, disclosed_by_bob;
  for (const Component& c : classification.components) {
    if (c.group() != Group::CollapsedChain) continue;
    const Bit a = own(alice, c.alice_endpoint);
    const Bit b = own(bob, c.bob_endpoint);
    r.disclosures.push_back({Role::Alice, c.alice_endpoint, a});
    r.disclosures.push_back({Role::Bob, c.bob_endpoint, b});
    disclosed_by_alice[c.alice_endpoint] = a;
    disclosed_by_bob[c.bob_endpoint] = b;
  }

  const CheckInput in{classification, mr};
  const auto alice_view = run_checks(
      in, [&](Position p) { return own(alice, p); }, [&](Position p) { return disclosed_by_bob.at(p); });
  const auto bob_view = run_checks(
      in, [&](Position p) { return disclosed_by_alice.at(p); }, [&](Position p) { return own(bob, p); });
  if (!same_verdicts(alice_view, bob_view)) {
    throw std::logic_error("Alice and Bob reached different verdicts");
  }
  r.verdicts = alice_view;
  r.abort = first_failure(r.verdicts);

  // Case 1 bits by position, then Case 3 bits by slot.
  for (Position p : classification.case1_positions) {
    r.raw_alice.push_back(own(alice, p));
    r.raw_bob.push_back(own(bob, p));
  }
  r.case1_bits = classification.case1_positions.size();

  std::vector<const Component*> case3;
  for (const Component& c : classification.components) {
    if (c.group() == Group::CollapsedPair) case3.push_back(&c);
  }
  std::sort(case3.begin(), case3.end(), [](const Component* x, const Component* y) { return x->slots[0] < y->slots[0]; });
  for (const Component* c : case3) {
    r.raw_alice.push_back(own(alice, c->alice_endpoint));
    const BellType result = mr.results[c->slots[0]];
    r.raw_bob.push_back(bell::infer_remote_bit(own(bob, c->bob_endpoint), BellType::PhiPlus, BellType::PhiPlus, {},
                                               std::span<const BellType>(&result, 1)));
  }
  r.case3_bits = case3.size();
  return r;
}

PublicVerdict verify_transcript(const Transcript& transcript) {
  std::optional<std::uint32_t> n;
  const MRAnnouncement* mr = nullptr;
  const OrderAnnounce* alice = nullptr;
  const OrderAnnounce* bob = nullptr;
  std::map<Position, Bit> alice_bits, bob_bits;
  PublicVerdict verdict;

  for (const auto& record : transcript.records()) {
    if (const auto* q = std::get_if<QuantumSend>(&record); q && q->from == Party::Tp && q->to == Party::Alice) {
      n = q->qubits;
    } else if (const auto* m = std::get_if<MrAnnounce>(&record)) {
      mr = &m->mr;
    } else if (const auto* o = std::get_if<OrderAnnounce>(&record)) {
      (o->role == Role::Alice ? alice : bob) = o;
    } else if (const auto* d = std::get_if<Case4Disclose>(&record)) {
      (d->role == Role::Alice ? alice_bits : bob_bits)[d->position] = d->bit;
    } else if (const auto* a = std::get_if<AbortRecord>(&record)) {
      verdict.recorded_abort = a->info;
    }
  }
  if (!n || !mr || !alice || !bob) {
    throw std::invalid_argument("transcript lacks the records needed for verification");
  }
  if (mr->results.size() != *n / 2) {
    throw std::invalid_argument("MR announcement has the wrong length");
  }
  verdict.classification = classify_components(alice->measured, bob->measured, alice->order, bob->order, *n);

  bool missing = false;
  auto lookup = [&missing](const std::map<Position, Bit>& bits, Position p) -> Bit {
    auto it = bits.find(p);
    if (it == bits.end()) {
      missing = true;
      return 0;
    }
    return it->second;
  };
  const CheckInput in{verdict.classification, *mr};
  verdict.verdicts = run_checks(
      in, [&](Position p) { return lookup(alice_bits, p); }, [&](Position p) { return lookup(bob_bits, p); });
  verdict.computed_abort = first_failure(verdict.verdicts);

  const auto& c = verdict.computed_abort;
  const auto& rec = verdict.recorded_abort;
  const bool same_abort = (!c && !rec) || (c && rec && c->stage == rec->stage && c->component == rec->component);
  verdict.consistent = !missing && same_abort;
  return verdict;
}

}  // namespace semiq::protocol
