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

#include "engine/dense_state.hpp"

#include <cmath>
#include <utility>

namespace semiq::engine {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

DenseState::DenseState(std::size_t size) : size_(size), amps_(std::size_t{1} << size) { amps_[0] = 1.0; }

std::unique_ptr<StateBackend> DenseState::clone() const { return std::make_unique<DenseState>(*this); }

void DenseState::apply_gate(Gate g, std::uint32_t q) {
  const std::size_t mask = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) {
      continue;
    }
    auto& a0 = amps_[i];
    auto& a1 = amps_[i | mask];
    switch (g) {
      case Gate::X:
        std::swap(a0, a1);
        break;
      case Gate::Y: {
        // i*sigma_y = [[0, 1], [-1, 0]]
        const auto old0 = a0;
        a0 = a1;
        a1 = -old0;
        break;
      }
      case Gate::Z:
        a1 = -a1;
        break;
      case Gate::H: {
        const auto old0 = a0;
        a0 = (old0 + a1) * kInvSqrt2;
        a1 = (old0 - a1) * kInvSqrt2;
        break;
      }
    }
  }
}

void DenseState::apply_cnot(std::uint32_t control, std::uint32_t target) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) {
      std::swap(amps_[i], amps_[i | tmask]);
    }
  }
}

double DenseState::probability_one(std::uint32_t q) const {
  const std::size_t mask = std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) {
      p += std::norm(amps_[i]);
    }
  }
  return p;
}

void DenseState::project(std::uint32_t q, Bit value, double p) {
  const std::size_t mask = std::size_t{1} << q;
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const bool one = (i & mask) != 0;
    if (one == (value != 0)) {
      amps_[i] *= scale;
    } else {
      amps_[i] = 0.0;
    }
  }
}

Bit DenseState::measure_z(std::uint32_t q, StreamRng& rng) {
  const double p1 = probability_one(q);
  // Draw even when the outcome is certain so stream consumption per
  // measurement is fixed.
  const double r = rng.uniform01();
  const Bit outcome = r < p1 ? 1 : 0;
  project(q, outcome, outcome ? p1 : 1.0 - p1);
  return outcome;
}

double DenseState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) {
    total += std::norm(a);
  }
  return total;
}

}  // namespace semiq::engine
