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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bell_algebra.hpp"
#include "rng.hpp"

namespace semiq::pa {

using bell::Bit;

/// Compression ratio num/den in (0, 1].
struct Ratio {
  std::uint32_t num = 1;
  std::uint32_t den = 2;

  bool valid() const { return den != 0 && num != 0 && num <= den; }
  std::size_t apply(std::size_t input_len) const {
    return static_cast<std::size_t>(static_cast<std::uint64_t>(input_len) * num / den);
  }
  std::string to_string() const;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Accepts "p/q" or a decimal such as "0.5"; returns nullopt unless the value
/// lies in (0, 1].
std::optional<Ratio> parse_ratio(std::string_view text);

/// Toeplitz hash parameters for one input length.
///
/// The matrix has output_len rows and input_len columns with
/// T[i][j] = seed_bits[j - i + output_len - 1]; the seed therefore lists the
/// first column bottom-to-top followed by the rest of the first row.
struct PAParams {
  Ratio ratio;
  std::size_t input_len = 0;
  std::vector<Bit> seed_bits;

  std::size_t output_len() const { return ratio.apply(input_len); }
  std::size_t expected_seed_len() const;

  /// Fresh uniformly random seed.
  static PAParams random(Ratio ratio, std::size_t input_len, StreamRng& rng);
  /// Builds the seed from an explicit first column and first row, which must
  /// agree on T[0][0].
  static PAParams from_first_column_row(Ratio ratio, std::span<const Bit> first_column,
                                        std::span<const Bit> first_row);
};

/// output[i] = XOR_j T[i][j] & raw[j]. Throws std::invalid_argument when the
/// seed length does not match raw.size() or the ratio is invalid.
std::vector<Bit> amplify(std::span<const Bit> raw, const PAParams& params);

}  // namespace semiq::pa
