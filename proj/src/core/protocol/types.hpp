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
#include <optional>
#include <string_view>
#include <vector>

#include "bell_algebra.hpp"
#include "engine/register.hpp"

namespace semiq::protocol {

using bell::BellType;
using bell::Bit;
using engine::QubitId;

/// Positions are 0-based indices of the n Bell pairs prepared by the TP.
using Position = std::uint32_t;
/// TP pairing slot k joins the k-th qubit of Q1 with the k-th qubit of Q2.
using Slot = std::uint32_t;

enum class Role : std::uint8_t { Alice, Bob };
std::string_view to_string(Role r);

/// One classical party after its Z measurements and reordering.
struct PartyState {
  Role role = Role::Alice;
  std::vector<Position> measured_positions;  // sorted, size n/2
  std::map<Position, Bit> z_results;
  std::vector<Position> send_order;  // slot -> retained position

  std::size_t n() const { return measured_positions.size() + send_order.size(); }
};

/// S1 (first qubits, sent to Alice) and S2 (second qubits, sent to Bob).
struct Wires {
  std::vector<QubitId> a;
  std::vector<QubitId> b;
};

struct MRAnnouncement {
  std::vector<BellType> results;  // indexed by slot
  friend bool operator==(const MRAnnouncement&, const MRAnnouncement&) = default;
};

enum class ComponentKind : std::uint8_t { Cycle, Chain };
std::string_view to_string(ComponentKind k);

/// Which of the four component groups a component falls in; Case 1 positions
/// are reported separately.
enum class Group : std::uint8_t {
  OriginalPair = 1,      // cycle through one pair
  Swapping = 2,          // cycle through several pairs
  CollapsedPair = 3,     // chain of one measurement, key bit
  CollapsedChain = 4,    // longer chain, disclosed and checked
};

/// A connected piece of the graph whose edges are the TP pairing slots and
/// the surviving Bell pairs.
struct Component {
  ComponentKind kind = ComponentKind::Cycle;
  /// For chains: ordered from the collapsed qubit on Alice's wire to the
  /// collapsed qubit on Bob's wire. For cycles: traversal order.
  std::vector<Slot> slots;
  /// Surviving pairs crossed by the component (all of them for a cycle, the
  /// intermediates for a chain), in traversal order.
  std::vector<Position> pairs;
  /// Chains only: position Alice measured, whose partner sits on Bob's wire.
  Position alice_endpoint = 0;
  /// Chains only: position Bob measured, whose partner sits on Alice's wire.
  Position bob_endpoint = 0;

  Group group() const;
  std::size_t length() const { return slots.size(); }
};

struct Classification {
  std::vector<Position> case1_positions;  // measured by both, ascending
  std::vector<Component> components;      // ordered by smallest slot
};

/// Case 2 checks cycles against the XOR rule; Case 4 checks disclosed chains.
enum class AbortStage : std::uint8_t { Case2, Case4 };
std::string_view to_string(AbortStage s);

struct AbortInfo {
  AbortStage stage = AbortStage::Case2;
  std::uint32_t component = 0;
  ComponentKind kind = ComponentKind::Cycle;
};

}  // namespace semiq::protocol
