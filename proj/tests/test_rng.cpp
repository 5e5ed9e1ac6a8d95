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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "rng.hpp"

using semiq::derive_seed;
using semiq::StreamRng;

TEST_CASE("streams replay and differ") {
  StreamRng a(7, 1), b(7, 1), c(7, 2), d(8, 1);
  std::vector<std::uint64_t> va, vb, vc, vd;
  for (int i = 0; i < 100; ++i) {
    va.push_back(a());
    vb.push_back(b());
    vc.push_back(c());
    vd.push_back(d());
  }
  CHECK(va == vb);
  CHECK(va != vc);
  CHECK(va != vd);
  CHECK(a.position() == 100);
}

TEST_CASE("derived seeds are distinct") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t parent = 0; parent < 50; ++parent) {
    for (std::uint64_t i = 0; i < 200; ++i) seen.insert(derive_seed(parent, i));
  }
  CHECK(seen.size() == 50 * 200);
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}

TEST_CASE("bounded draws stay in range and are roughly uniform") {
  StreamRng rng(3, 0);
  const std::uint64_t bound = 7;
  std::vector<std::uint64_t> counts(bound);
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const auto v = rng.below(bound);
    REQUIRE(v < bound);
    ++counts[v];
  }
  // Chi-square with 6 degrees of freedom; 22.46 is the 0.001 critical value.
  double chi = 0.0;
  for (auto c : counts) chi += (c - 10000.0) * (c - 10000.0) / 10000.0;
  CHECK(chi < 22.46);
  CHECK(rng.below(1) == 0);

  int ones = 0;
  for (int i = 0; i < 10000; ++i) ones += rng.bit();
  CHECK(std::abs(ones - 5000) <= 150);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("shuffle is a permutation") {
  StreamRng rng(4, 0);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  rng.shuffle(std::span<int>(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) CHECK(sorted[i] == i);
  CHECK_FALSE(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("usable with standard distributions") {
  StreamRng rng(5, 0);
  std::uniform_int_distribution<int> dist(1, 6);
  for (int i = 0; i < 100; ++i) {
    const int x = dist(rng);
    CHECK(x >= 1);
    CHECK(x <= 6);
  }
}
