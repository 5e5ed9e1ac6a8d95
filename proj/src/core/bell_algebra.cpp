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

#include "bell_algebra.hpp"

#include <array>
#include <stdexcept>

namespace semiq::bell {

namespace {

constexpr std::array<std::string_view, 4> kNames = {"PHI_PLUS", "PHI_MINUS", "PSI_PLUS", "PSI_MINUS"};

void check_bit(Bit b, const char* what) {
  if (b > 1) {
    throw std::invalid_argument(std::string(what) + " must be 0 or 1");
  }
}

Bit parity_sum(std::span<const BellType> states) {
  Bit acc = 0;
  for (BellType s : states) {
    acc ^= parity(s);
  }
  return acc;
}

}  // namespace

std::string_view to_string(BellType v) { return kNames[code2(v)]; }

std::optional<BellType> parse_bell_type(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) {
      return from_code2(static_cast<std::uint8_t>(i));
    }
  }
  return std::nullopt;
}

bool xor_rule_holds(std::span<const BellType> initials, std::span<const BellType> results) {
  if (initials.empty() || initials.size() != results.size()) {
    throw std::invalid_argument("xor_rule_holds: sequences must be nonempty and of equal length");
  }
  std::uint8_t acc = 0;
  for (std::size_t i = 0; i < initials.size(); ++i) {
    acc ^= code2(initials[i]) ^ code2(results[i]);
  }
  return acc == 0;
}

Bit collapse_partner(BellType initial, Bit measured) {
  check_bit(measured, "measured");
  return measured ^ parity(initial);
}

Bit bm_parity(Bit z1, Bit z2) {
  check_bit(z1, "z1");
  check_bit(z2, "z2");
  return z1 ^ z2;
}

Bit infer_remote_bit(Bit own_zmr, BellType is_own, BellType is_remote,
                     std::span<const BellType> intermediates, std::span<const BellType> mrs) {
  check_bit(own_zmr, "own_zmr");
  if (mrs.size() != intermediates.size() + 1) {
    throw std::invalid_argument("infer_remote_bit: need exactly one more result than intermediate pairs");
  }
  return own_zmr ^ parity(is_own) ^ parity(is_remote) ^ parity_sum(intermediates) ^ parity_sum(mrs);
}

bool chain_relation_holds(const ChainSpec& spec) {
  check_bit(spec.zmr2, "zmr2");
  return spec.zmr2 == infer_remote_bit(spec.zmr1, spec.is1, spec.is2, spec.intermediates, spec.mrs);
}

}  // namespace semiq::bell
