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

#include <vector>

#include "engine/register.hpp"

namespace semiq::engine {

/// Stabilizer tableau (destabilizers + stabilizers, Aaronson-Gottesman
/// update rules) with sparse rows.
///
/// Each row is a signed Pauli string stored as a sorted list of its
/// non-identity sites, and every qubit keeps the list of rows that act on it.
/// Gates and measurements therefore touch only the rows supported on the
/// affected qubits, and memory is linear in the total row weight. This is
/// what lets a register of 10^5 qubits exist when the entanglement is local
/// (Bell pairs and swaps), which a dense 2n x 2n bit tableau cannot.
///
/// Global phase is not tracked.
class TableauState final : public StateBackend {
 public:
  explicit TableauState(std::size_t size);

  std::unique_ptr<StateBackend> clone() const override;
  std::size_t size() const override { return n_; }
  void apply_gate(Gate g, std::uint32_t q) override;
  void apply_cnot(std::uint32_t control, std::uint32_t target) override;
  Bit measure_z(std::uint32_t q, StreamRng& rng) override;

  /// Total number of non-identity sites over all rows.
  std::size_t total_weight() const;

 private:
  struct Term {
    std::uint32_t qubit;
    std::uint8_t xz;  // bit 0: X component, bit 1: Z component
  };
  struct Row {
    std::vector<Term> terms;  // sorted by qubit, xz != 0
    std::uint8_t sign = 0;    // 1 means a leading minus
  };

  static std::uint8_t site(const Row& row, std::uint32_t q);
  static void multiply_into(Row& target, const Row& source);

  void set_site(std::uint32_t row, std::uint32_t q, std::uint8_t xz);
  void replace_row(std::uint32_t row, Row value);
  void link(std::uint32_t q, std::uint32_t row);
  void unlink(std::uint32_t q, std::uint32_t row);

  std::size_t n_;
  std::vector<Row> rows_;  // [0, n) destabilizers, [n, 2n) stabilizers
  std::vector<std::vector<std::uint32_t>> touching_;
};

}  // namespace semiq::engine
