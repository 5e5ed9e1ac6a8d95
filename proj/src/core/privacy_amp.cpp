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

#include "privacy_amp.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace semiq::pa {

std::string Ratio::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

std::optional<Ratio> parse_ratio(std::string_view text) {
  auto parse_u64 = [](std::string_view s) -> std::optional<std::uint64_t> {
    std::uint64_t v = 0;
    if (s.empty()) return std::nullopt;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  };

  std::uint64_t num = 0;
  std::uint64_t den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto n = parse_u64(text.substr(0, slash));
    auto d = parse_u64(text.substr(slash + 1));
    if (!n || !d) return std::nullopt;
    num = *n;
    den = *d;
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 9) return std::nullopt;
    auto w = whole.empty() ? std::optional<std::uint64_t>{0} : parse_u64(whole);
    auto f = frac.empty() ? std::optional<std::uint64_t>{0} : parse_u64(frac);
    if (!w || !f) return std::nullopt;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = *w * den + *f;
  } else {
    auto w = parse_u64(text);
    if (!w) return std::nullopt;
    num = *w;
  }
  if (den == 0 || num == 0 || num > den) return std::nullopt;
  const std::uint64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den > UINT32_MAX) return std::nullopt;
  return Ratio{static_cast<std::uint32_t>(num), static_cast<std::uint32_t>(den)};
}

std::size_t PAParams::expected_seed_len() const {
  const std::size_t total = input_len + output_len();
  return total == 0 ? 0 : total - 1;
}

PAParams PAParams::random(Ratio ratio, std::size_t input_len, StreamRng& rng) {
  PAParams p{ratio, input_len, {}};
  p.seed_bits.resize(p.expected_seed_len());
  for (auto& b : p.seed_bits) {
    b = rng.bit();
  }
  return p;
}

PAParams PAParams::from_first_column_row(Ratio ratio, std::span<const Bit> first_column,
                                         std::span<const Bit> first_row) {
  PAParams p{ratio, first_row.size(), {}};
  if (first_column.size() != p.output_len()) {
    throw std::invalid_argument("first column length must equal the output length");
  }
  if (!first_column.empty() && !first_row.empty() && first_column[0] != first_row[0]) {
    throw std::invalid_argument("first column and first row disagree on the corner element");
  }
  // seed[k] = T[output_len - 1 - k][0] for k < output_len, then T[0][k - output_len + 1].
  for (std::size_t k = first_column.size(); k-- > 0;) {
    p.seed_bits.push_back(first_column[k]);
  }
  for (std::size_t j = first_column.empty() ? 0 : 1; j < first_row.size(); ++j) {
    p.seed_bits.push_back(first_row[j]);
  }
  if (first_column.empty() && !first_row.empty()) {
    // A zero-row matrix still carries input_len - 1 seed bits by convention.
    p.seed_bits.pop_back();
  }
  return p;
}

std::vector<Bit> amplify(std::span<const Bit> raw, const PAParams& params) {
  if (!params.ratio.valid()) {
    throw std::invalid_argument("privacy amplification ratio must lie in (0, 1]");
  }
  if (raw.size() != params.input_len) {
    throw std::invalid_argument("raw key length " + std::to_string(raw.size()) +
                                " does not match parameters built for " + std::to_string(params.input_len));
  }
  if (params.seed_bits.size() != params.expected_seed_len()) {
    throw std::invalid_argument("Toeplitz seed must have " + std::to_string(params.expected_seed_len()) +
                                " bits, got " + std::to_string(params.seed_bits.size()));
  }
  const std::size_t out_len = params.output_len();
  std::vector<Bit> out(out_len, 0);
  for (std::size_t i = 0; i < out_len; ++i) {
    Bit acc = 0;
    for (std::size_t j = 0; j < raw.size(); ++j) {
      acc ^= params.seed_bits[j + out_len - 1 - i] & raw[j];
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace semiq::pa
