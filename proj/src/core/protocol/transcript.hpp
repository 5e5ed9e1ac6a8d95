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

// Append-only record of every message in one protocol run.
//
// Text form, one record per line, fields separated by a single space, lists
// comma-separated with "-" for an empty list:
//
//   QUANTUM_SEND <from> <to> <qubits>          from/to in {TP, ALICE, BOB}
//   MR_ANNOUNCE <codes>                        one digit 0-3 per slot (code2)
//   ORDER_ANNOUNCE <role> <order> <measured>   positions are 0-based
//   CASE4_DISCLOSE <role> <position> <bit>
//   ABORT <stage> <component> <kind>           stage in {CASE2, CASE4}
//   PA_SEED <num/den> <input_len> <bits>       bits as a 0/1 string or "-"

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "privacy_amp.hpp"
#include "protocol/types.hpp"

namespace semiq::protocol {

enum class Party : std::uint8_t { Tp, Alice, Bob };

struct QuantumSend {
  Party from = Party::Tp;
  Party to = Party::Alice;
  std::uint32_t qubits = 0;
  friend bool operator==(const QuantumSend&, const QuantumSend&) = default;
};

struct MrAnnounce {
  MRAnnouncement mr;
  friend bool operator==(const MrAnnounce&, const MrAnnounce&) = default;
};

struct OrderAnnounce {
  Role role = Role::Alice;
  std::vector<Position> order;
  std::vector<Position> measured;
  friend bool operator==(const OrderAnnounce&, const OrderAnnounce&) = default;
};

struct Case4Disclose {
  Role role = Role::Alice;
  Position position = 0;
  Bit bit = 0;
  friend bool operator==(const Case4Disclose&, const Case4Disclose&) = default;
};

struct AbortRecord {
  AbortInfo info;
  friend bool operator==(const AbortRecord& a, const AbortRecord& b) {
    return a.info.stage == b.info.stage && a.info.component == b.info.component && a.info.kind == b.info.kind;
  }
};

struct PaSeed {
  pa::Ratio ratio;
  std::uint32_t input_len = 0;
  std::vector<Bit> bits;
  friend bool operator==(const PaSeed&, const PaSeed&) = default;
};

using Record = std::variant<QuantumSend, MrAnnounce, OrderAnnounce, Case4Disclose, AbortRecord, PaSeed>;

class Transcript {
 public:
  /// Throws std::logic_error if an ORDER_ANNOUNCE would precede the
  /// MR_ANNOUNCE, or if a second MR_ANNOUNCE is appended.
  void append(Record record);

  const std::vector<Record>& records() const { return records_; }
  const MrAnnounce* mr_announce() const;

  std::string serialize() const;
  /// Throws std::invalid_argument on malformed text or ordering violations.
  static Transcript parse(std::string_view text);

 private:
  std::vector<Record> records_;
  bool has_mr_ = false;
};

std::string_view to_string(Party p);

}  // namespace semiq::protocol
