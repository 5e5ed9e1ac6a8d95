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

// Classical algebra of Bell-state labels.
//
// Every Bell state carries a two-bit code (parity bit, sign bit):
//
//   PhiPlus  = 00   PhiMinus = 01   PsiPlus = 10   PsiMinus = 11
//
// The high bit is the Z-parity of the two qubits (1 for the Psi states) and
// the low bit is the relative sign. Entanglement swapping preserves the XOR
// of the full codes around a closed cycle of Bell measurements; along an open
// chain terminated by Z-measured qubits only the parity bits survive.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace semiq::bell {

/// A classical bit, always 0 or 1.
using Bit = std::uint8_t;

enum class BellType : std::uint8_t {
  PhiPlus = 0,
  PhiMinus = 1,
  PsiPlus = 2,
  PsiMinus = 3,
};

constexpr std::uint8_t code2(BellType v) { return static_cast<std::uint8_t>(v); }

/// Inverse of code2; only the low two bits of `code` are used.
constexpr BellType from_code2(std::uint8_t code) { return static_cast<BellType>(code & 3U); }

/// 1 for the Psi states, 0 for the Phi states.
constexpr Bit parity(BellType v) { return static_cast<Bit>(code2(v) >> 1); }

/// 1 for the minus states.
constexpr Bit sign(BellType v) { return static_cast<Bit>(code2(v) & 1U); }

constexpr BellType from_parts(Bit parity_bit, Bit sign_bit) {
  return from_code2(static_cast<std::uint8_t>(((parity_bit & 1U) << 1) | (sign_bit & 1U)));
}

std::string_view to_string(BellType v);
std::optional<BellType> parse_bell_type(std::string_view text);

/// True iff the XOR of the initial codes equals the XOR of the result codes.
/// Throws std::invalid_argument on empty or length-mismatched input.
bool xor_rule_holds(std::span<const BellType> initials, std::span<const BellType> results);

/// Z value of the surviving qubit after its partner measured `measured`.
Bit collapse_partner(BellType initial, Bit measured);

/// Parity code of any Bell-measurement outcome on the product state |z1 z2>.
/// The sign bit of such an outcome is uniformly random and not determined.
Bit bm_parity(Bit z1, Bit z2);

/// An open chain: the first pair (is1) has one qubit Z-measured with result
/// zmr1, the last pair (is2) has one qubit Z-measured with result zmr2, and
/// `intermediates` are the untouched pairs in between. The chain is closed by
/// intermediates.size() + 1 Bell measurements with results `mrs`.
struct ChainSpec {
  BellType is1 = BellType::PhiPlus;
  BellType is2 = BellType::PhiPlus;
  std::vector<BellType> intermediates;
  Bit zmr1 = 0;
  Bit zmr2 = 0;
  std::vector<BellType> mrs;
};

/// zmr2 == zmr1 ^ parity(is1) ^ parity(is2) ^ parities(intermediates) ^ parities(mrs).
/// Throws std::invalid_argument if mrs.size() != intermediates.size() + 1.
bool chain_relation_holds(const ChainSpec& spec);

/// The remote endpoint's Z result implied by the chain relation.
Bit infer_remote_bit(Bit own_zmr, BellType is_own, BellType is_remote,
                     std::span<const BellType> intermediates, std::span<const BellType> mrs);

}  // namespace semiq::bell
