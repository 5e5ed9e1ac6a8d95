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

#include <span>
#include <utility>

#include "engine/register.hpp"
#include "protocol/steps.hpp"
#include "protocol/transcript.hpp"
#include "protocol/types.hpp"

namespace semiq::protocol {

/// Per-run third-party behavior. run_protocol calls the hooks in schedule
/// order: prepare, on_outbound, on_return, then on_orders_revealed after the
/// MR announcement is already in the transcript. The transcript is only ever
/// handed out as const, so a behavior cannot rewrite its announcement.
class TpBehavior {
 public:
  virtual ~TpBehavior() = default;

  virtual Wires prepare(engine::Register& reg, std::uint32_t n) { return tp_step1(reg, n); }
  virtual void on_outbound(engine::Register& /*reg*/, const Wires& /*wires*/) {}
  virtual MRAnnouncement on_return(engine::Register& reg, std::span<const QubitId> q1,
                                   std::span<const QubitId> q2) = 0;
  virtual void on_orders_revealed(const Transcript& /*transcript*/) {}

  /// Z bits (q1[k], q2[k]) recorded per slot, for behaviors that measure.
  virtual std::span<const std::pair<Bit, Bit>> recorded_z() const { return {}; }
  /// Positions of S1 qubits the behavior tampered with.
  virtual std::span<const Position> attacked_positions() const { return {}; }
};

}  // namespace semiq::protocol
