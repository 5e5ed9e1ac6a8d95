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

#include "engine/register.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "engine/dense_state.hpp"
#include "engine/tableau_state.hpp"
#include "errors.hpp"

namespace semiq::engine {

namespace {

// Branches below this probability are numerical residue of exact zeros.
constexpr double kPruneBelow = 1e-12;

void enumerate(const DenseState& state, const MeasurementPlan& plan, std::size_t step, double weight,
               Outcome& prefix, OutcomeDistribution& out) {
  if (step == plan.size()) {
    out[prefix] += weight;
    return;
  }
  const MeasurementStep& s = plan[step];
  if (s.kind == MeasurementStep::Kind::Z) {
    const double p1 = state.probability_one(s.a.index);
    for (Bit v : {Bit{0}, Bit{1}}) {
      const double p = v ? p1 : 1.0 - p1;
      if (p < kPruneBelow) {
        continue;
      }
      DenseState branch(state);
      branch.project(s.a.index, v, p);
      prefix.push_back(v);
      enumerate(branch, plan, step + 1, weight * p, prefix, out);
      prefix.pop_back();
    }
    return;
  }
  DenseState rotated(state);
  rotated.apply_cnot(s.a.index, s.b.index);
  rotated.apply_gate(Gate::H, s.a.index);
  const double ps1 = rotated.probability_one(s.a.index);
  for (Bit sign_bit : {Bit{0}, Bit{1}}) {
    const double ps = sign_bit ? ps1 : 1.0 - ps1;
    if (ps < kPruneBelow) {
      continue;
    }
    DenseState after_sign(rotated);
    after_sign.project(s.a.index, sign_bit, ps);
    const double pp1 = after_sign.probability_one(s.b.index);
    for (Bit parity_bit : {Bit{0}, Bit{1}}) {
      const double pp = parity_bit ? pp1 : 1.0 - pp1;
      if (pp < kPruneBelow) {
        continue;
      }
      DenseState branch(after_sign);
      branch.project(s.b.index, parity_bit, pp);
      branch.apply_gate(Gate::H, s.a.index);
      branch.apply_cnot(s.a.index, s.b.index);
      prefix.push_back(bell::code2(bell::from_parts(parity_bit, sign_bit)));
      enumerate(branch, plan, step + 1, weight * ps * pp, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::string_view to_string(Backend b) { return b == Backend::Dense ? "dense" : "tableau"; }

std::string_view to_string(Gate g) {
  constexpr std::array<std::string_view, 4> names = {"x", "y", "z", "h"};
  return names[static_cast<std::size_t>(g)];
}

std::optional<Backend> parse_backend(std::string_view text) {
  if (text == "dense") return Backend::Dense;
  if (text == "tableau") return Backend::Tableau;
  return std::nullopt;
}

std::optional<Gate> parse_gate(std::string_view text) {
  if (text == "x" || text == "X") return Gate::X;
  if (text == "y" || text == "Y") return Gate::Y;
  if (text == "z" || text == "Z") return Gate::Z;
  if (text == "h" || text == "H") return Gate::H;
  return std::nullopt;
}

Register::Register(std::size_t size, Backend backend, std::uint64_t seed, std::uint64_t register_id)
    : backend_(backend), rng_(seed, register_id) {
  if (size == 0) {
    throw std::invalid_argument("register size must be at least 1");
  }
  if (backend == Backend::Dense) {
    if (size > kDenseMaxQubits) {
      throw CapacityError("dense register of " + std::to_string(size) + " qubits exceeds the cap of " +
                          std::to_string(kDenseMaxQubits));
    }
    state_ = std::make_unique<DenseState>(size);
  } else {
    if (size > UINT32_MAX / 2) {
      throw CapacityError("tableau register too large");
    }
    state_ = std::make_unique<TableauState>(size);
  }
}

Register::Register(const Register& other)
    : backend_(other.backend_), state_(other.state_->clone()), rng_(other.rng_) {}

Register& Register::operator=(const Register& other) {
  if (this != &other) {
    backend_ = other.backend_;
    state_ = other.state_->clone();
    rng_ = other.rng_;
  }
  return *this;
}

void Register::check(QubitId q) const {
  if (q.index >= state_->size()) {
    throw std::invalid_argument("qubit " + std::to_string(q.index) + " out of range for register of size " +
                                std::to_string(state_->size()));
  }
}

void Register::check_pair(QubitId a, QubitId b) const {
  check(a);
  check(b);
  if (a == b) {
    throw std::invalid_argument("two-qubit operation needs distinct qubits");
  }
}

void Register::prepare_bell_phi_plus(QubitId a, QubitId b) {
  check_pair(a, b);
  state_->apply_gate(Gate::H, a.index);
  state_->apply_cnot(a.index, b.index);
}

void Register::apply_gate(Gate g, QubitId q) {
  check(q);
  state_->apply_gate(g, q.index);
}

void Register::apply_cnot(QubitId control, QubitId target) {
  check_pair(control, target);
  state_->apply_cnot(control.index, target.index);
}

Bit Register::measure_z(QubitId q) {
  check(q);
  return state_->measure_z(q.index, rng_);
}

BellType Register::measure_bell(QubitId a, QubitId b) {
  check_pair(a, b);
  state_->apply_cnot(a.index, b.index);
  state_->apply_gate(Gate::H, a.index);
  const Bit sign_bit = state_->measure_z(a.index, rng_);
  const Bit parity_bit = state_->measure_z(b.index, rng_);
  state_->apply_gate(Gate::H, a.index);
  state_->apply_cnot(a.index, b.index);
  return bell::from_parts(parity_bit, sign_bit);
}

OutcomeDistribution Register::outcome_distribution(const MeasurementPlan& plan) const {
  const auto* dense = dynamic_cast<const DenseState*>(state_.get());
  if (dense == nullptr) {
    throw UnsupportedOperation("outcome_distribution requires the dense backend");
  }
  for (const auto& step : plan) {
    if (step.kind == MeasurementStep::Kind::Z) {
      check(step.a);
    } else {
      check_pair(step.a, step.b);
    }
  }
  OutcomeDistribution out;
  Outcome prefix;
  enumerate(*dense, plan, 0, 1.0, prefix, out);
  return out;
}

double Register::norm_squared() const {
  const auto* dense = dynamic_cast<const DenseState*>(state_.get());
  if (dense == nullptr) {
    throw UnsupportedOperation("norm_squared requires the dense backend");
  }
  return dense->norm_squared();
}

}  // namespace semiq::engine
