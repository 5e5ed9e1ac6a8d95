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

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "engine/register.hpp"
#include "protocol/hooks.hpp"
#include "rng.hpp"

namespace semiq::adversary {

enum class StrategyKind : std::uint8_t { Honest, NaiveMeasure, ParityAwareMeasure, Modification };

/// Immutable description of a third-party behavior.
///
///  - Honest: PhiPlus pairs, truthful Bell measurements.
///  - NaiveMeasure: Z-measures every returned qubit and announces an
///    independent uniform Bell label per slot.
///  - ParityAwareMeasure: Z-measures every returned qubit and announces the
///    label whose parity matches z(q1[k]) ^ z(q2[k]), with a random sign.
///  - Modification: applies `gate` to m uniformly chosen S1 qubits on the way
///    out, applies it again to those that come back, then measures honestly.
class TpStrategy {
 public:
  static TpStrategy honest();
  static TpStrategy naive_measure();
  static TpStrategy parity_aware_measure();
  static TpStrategy modification(engine::Gate gate, std::uint32_t m);

  /// Name as used on the command line: honest, naive-measure, parity-measure,
  /// modify. Throws std::invalid_argument for unknown names.
  static TpStrategy from_name(std::string_view name, engine::Gate gate = engine::Gate::X, std::uint32_t m = 1);

  StrategyKind kind() const { return kind_; }
  engine::Gate gate() const { return gate_; }
  std::uint32_t m() const { return m_; }

  /// Stable text form, e.g. "honest" or "modify:x:8".
  std::string descriptor() const;

  /// Fresh per-run hook state drawing randomness from `rng`. Throws
  /// std::invalid_argument if m exceeds n.
  std::unique_ptr<protocol::TpBehavior> instantiate(std::uint32_t n, StreamRng rng) const;

 private:
  TpStrategy(StrategyKind kind, engine::Gate gate, std::uint32_t m) : kind_(kind), gate_(gate), m_(m) {}

  StrategyKind kind_;
  engine::Gate gate_;
  std::uint32_t m_;
};

std::string_view cli_name(StrategyKind kind);

}  // namespace semiq::adversary
