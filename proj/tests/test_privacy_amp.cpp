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

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "privacy_amp.hpp"
#include "rng.hpp"

using namespace semiq;
using namespace semiq::pa;
using Bits = std::vector<Bit>;

namespace {

// Reference: the explicit Toeplitz matrix built from its first column and
// first row, multiplied over GF(2).
Bits toeplitz_reference(const Bits& column, const Bits& row, const Bits& x) {
  Bits out(column.size(), 0);
  for (std::size_t i = 0; i < column.size(); ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const Bit t = i >= j ? column[i - j] : row[j - i];
      out[i] ^= t & x[j];
    }
  }
  return out;
}

Bits random_bits(StreamRng& rng, std::size_t n) {
  Bits b(n);
  for (auto& v : b) v = rng.bit();
  return b;
}

}  // namespace

TEST_CASE("ratio parsing") {
  CHECK(parse_ratio("1/2") == Ratio{1, 2});
  CHECK(parse_ratio("2/4") == Ratio{1, 2});
  CHECK(parse_ratio("0.5") == Ratio{1, 2});
  CHECK(parse_ratio("0.375") == Ratio{3, 8});
  CHECK(parse_ratio("1") == Ratio{1, 1});
  CHECK(parse_ratio("1.0") == Ratio{1, 1});
  CHECK_FALSE(parse_ratio("0").has_value());
  CHECK_FALSE(parse_ratio("3/2").has_value());
  CHECK_FALSE(parse_ratio("1/0").has_value());
  CHECK_FALSE(parse_ratio("half").has_value());
  CHECK_FALSE(parse_ratio("-1/2").has_value());
  CHECK(Ratio{3, 8}.to_string() == "3/8");
  CHECK(Ratio{1, 2}.apply(7) == 3);
}

TEST_CASE("zero seed gives zero output") {
  PAParams p{Ratio{1, 2}, 10, Bits(14, 0)};
  const auto out = amplify(Bits{1, 1, 0, 1, 0, 1, 1, 1, 0, 1}, p);
  CHECK(out == Bits(5, 0));
}

TEST_CASE("worked example") {
  const auto p = PAParams::from_first_column_row(Ratio{2, 3}, Bits{1, 0}, Bits{1, 0, 0});
  CHECK(p.output_len() == 2);
  CHECK(p.seed_bits.size() == 4);
  CHECK(amplify(Bits{1, 0, 1}, p) == Bits{1, 0});
  CHECK_THROWS_AS(PAParams::from_first_column_row(Ratio{2, 3}, Bits{0, 1}, Bits{1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(PAParams::from_first_column_row(Ratio{2, 3}, Bits{1}, Bits{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("matches the explicit matrix product") {
  StreamRng rng(8, 0);
  for (int t = 0; t < 300; ++t) {
    const std::size_t in = 1 + rng.below(40);
    const Ratio r{1 + static_cast<std::uint32_t>(rng.below(4)), 4};
    const std::size_t out = r.apply(in);
    if (out == 0) continue;
    Bits column = random_bits(rng, out);
    Bits row = random_bits(rng, in);
    row[0] = column[0];
    const Bits x = random_bits(rng, in);
    const auto p = PAParams::from_first_column_row(r, column, row);
    CHECK(amplify(x, p) == toeplitz_reference(column, row, x));
  }
}

TEST_CASE("length contract") {
  StreamRng rng(1, 0);
  for (std::size_t in = 0; in < 20; ++in) {
    const auto p = PAParams::random(Ratio{1, 2}, in, rng);
    CHECK(p.output_len() == in / 2);
    CHECK(p.seed_bits.size() == (in == 0 ? 0 : in + in / 2 - 1));
    CHECK(amplify(Bits(in, 1), p).size() == in / 2);
  }
  const auto p = PAParams::random(Ratio{1, 2}, 6, rng);
  CHECK_THROWS_AS(amplify(Bits(5, 0), p), std::invalid_argument);
  PAParams short_seed = p;
  short_seed.seed_bits.pop_back();
  CHECK_THROWS_AS(amplify(Bits(6, 0), short_seed), std::invalid_argument);
  PAParams bad_ratio = p;
  bad_ratio.ratio = Ratio{0, 1};
  CHECK_THROWS_AS(amplify(Bits(6, 0), bad_ratio), std::invalid_argument);
}

TEST_CASE("linearity and determinism") {
  StreamRng rng(2, 0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t in = rng.below(64);
    const auto p = PAParams::random(Ratio{1, 2}, in, rng);
    const Bits a = random_bits(rng, in);
    const Bits b = random_bits(rng, in);
    Bits ab(in);
    for (std::size_t i = 0; i < in; ++i) ab[i] = a[i] ^ b[i];
    const auto fa = amplify(a, p);
    const auto fb = amplify(b, p);
    const auto fab = amplify(ab, p);
    for (std::size_t i = 0; i < fab.size(); ++i) CHECK(fab[i] == (fa[i] ^ fb[i]));
    CHECK(amplify(a, p) == fa);
  }
}

TEST_CASE("universal: two distinct inputs collide under exactly 2^-out of all seeds") {
  // in = 6, out = 3: 8 seed bits, 256 matrices.
  const std::size_t in = 6;
  const Ratio r{1, 2};
  StreamRng rng(3, 0);
  for (int pair = 0; pair < 20; ++pair) {
    const Bits x = random_bits(rng, in);
    Bits y = random_bits(rng, in);
    if (x == y) y[0] ^= 1;
    std::uint32_t collisions = 0;
    for (std::uint32_t s = 0; s < 256; ++s) {
      PAParams p{r, in, Bits(8)};
      for (int k = 0; k < 8; ++k) p.seed_bits[k] = (s >> k) & 1U;
      collisions += amplify(x, p) == amplify(y, p) ? 1 : 0;
    }
    CHECK(collisions == 256 / 8);
  }
}
