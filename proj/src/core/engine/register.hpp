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
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "bell_algebra.hpp"
#include "rng.hpp"

namespace semiq::engine {

using bell::Bit;
using bell::BellType;

enum class Backend : std::uint8_t { Dense, Tableau };

/// Single-qubit gates used by the protocol and its attacks. Y is i*sigma_y.
enum class Gate : std::uint8_t { X, Y, Z, H };

std::string_view to_string(Backend b);
std::string_view to_string(Gate g);
std::optional<Backend> parse_backend(std::string_view text);
std::optional<Gate> parse_gate(std::string_view text);

/// Index of a qubit inside one register.
struct QubitId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(QubitId, QubitId) = default;
};

constexpr std::size_t kDenseMaxQubits = 24;

/// Backend state behind a Register. Both implementations are exact.
class StateBackend {
 public:
  virtual ~StateBackend() = default;
  virtual std::unique_ptr<StateBackend> clone() const = 0;
  virtual std::size_t size() const = 0;
  virtual void apply_gate(Gate g, std::uint32_t q) = 0;
  virtual void apply_cnot(std::uint32_t control, std::uint32_t target) = 0;
  virtual Bit measure_z(std::uint32_t q, StreamRng& rng) = 0;
};

/// One step of a measurement plan. For Bell steps, `a` is the control of the
/// decomposition and `b` the target.
struct MeasurementStep {
  enum class Kind : std::uint8_t { Z, Bell };
  Kind kind = Kind::Z;
  QubitId a;
  QubitId b;

  static MeasurementStep z(QubitId q) { return {Kind::Z, q, q}; }
  static MeasurementStep bell(QubitId a, QubitId b) { return {Kind::Bell, a, b}; }
};

using MeasurementPlan = std::vector<MeasurementStep>;

/// One entry per plan step: the Z bit, or the code2 of the Bell outcome.
using Outcome = std::vector<std::uint8_t>;
using OutcomeDistribution = std::map<Outcome, double>;

/// A quantum register with an owned random stream. Not thread-safe; distinct
/// registers are independent.
///
/// Bell measurement on (a, b): CNOT a->b, H on a, Z-measure a for the sign bit
/// and b for the parity bit, then undo the basis change so that the pair is
/// left in the measured Bell state.
class Register {
 public:
  /// Throws CapacityError for a dense register above kDenseMaxQubits and
  /// std::invalid_argument for size 0.
  Register(std::size_t size, Backend backend, std::uint64_t seed, std::uint64_t register_id = 0);

  Register(const Register& other);
  Register& operator=(const Register& other);
  Register(Register&&) noexcept = default;
  Register& operator=(Register&&) noexcept = default;
  ~Register() = default;

  std::size_t size() const { return state_->size(); }
  Backend backend() const { return backend_; }

  void prepare_bell_phi_plus(QubitId a, QubitId b);
  void apply_gate(Gate g, QubitId q);
  void apply_cnot(QubitId control, QubitId target);
  Bit measure_z(QubitId q);
  BellType measure_bell(QubitId a, QubitId b);

  /// Exact joint outcome probabilities of `plan`, computed on a copy of the
  /// state. Dense backend only; throws UnsupportedOperation otherwise.
  OutcomeDistribution outcome_distribution(const MeasurementPlan& plan) const;

  /// Dense backend only: sum of squared amplitudes.
  double norm_squared() const;

 private:
  void check(QubitId q) const;
  void check_pair(QubitId a, QubitId b) const;

  Backend backend_;
  std::unique_ptr<StateBackend> state_;
  StreamRng rng_;
};

}  // namespace semiq::engine
