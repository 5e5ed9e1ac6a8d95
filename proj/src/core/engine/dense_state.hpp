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

#include <complex>
#include <vector>

#include "engine/register.hpp"

namespace semiq::engine {

/// Full statevector. Qubit q is bit q of the amplitude index.
class DenseState final : public StateBackend {
 public:
  explicit DenseState(std::size_t size);

  std::unique_ptr<StateBackend> clone() const override;
  std::size_t size() const override { return size_; }
  void apply_gate(Gate g, std::uint32_t q) override;
  void apply_cnot(std::uint32_t control, std::uint32_t target) override;
  Bit measure_z(std::uint32_t q, StreamRng& rng) override;

  double probability_one(std::uint32_t q) const;
  /// Projects qubit q onto `value` and renormalizes. `p` is the probability of
  /// that branch, which must be positive.
  void project(std::uint32_t q, Bit value, double p);
  double norm_squared() const;

  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

 private:
  std::size_t size_;
  std::vector<std::complex<double>> amps_;
};

}  // namespace semiq::engine
