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

#include <vector>

#include "bell_algebra.hpp"
#include "doctest.h"
#include "oracle/bell_oracle.hpp"

using namespace semiq::bell;

namespace {

constexpr BellType kAll[] = {BellType::PhiPlus, BellType::PhiMinus, BellType::PsiPlus, BellType::PsiMinus};

// Pairs i = (2i, 2i+1) prepared in `initial`.
oracle::State pairs_state(const std::vector<BellType>& initial) {
  oracle::State s(static_cast<unsigned>(2 * initial.size()));
  for (unsigned i = 0; i < initial.size(); ++i) s.set_bell(2 * i, 2 * i + 1, code2(initial[i]));
  return s;
}

// Closed cycle: Bell-measure (2i, 2((i+1) mod k) + 1).
oracle::Distribution cycle_distribution(const std::vector<BellType>& initial) {
  const unsigned k = static_cast<unsigned>(initial.size());
  std::vector<oracle::Step> plan;
  for (unsigned i = 0; i < k; ++i) plan.push_back(oracle::bell(2 * i, 2 * ((i + 1) % k) + 1));
  return oracle::distribution(pairs_state(initial), plan);
}

// Open chain: Z on qubit 0 and on the last qubit, Bell on (2i+1, 2i+2).
oracle::Distribution chain_distribution(const std::vector<BellType>& initial) {
  const unsigned pairs = static_cast<unsigned>(initial.size());
  std::vector<oracle::Step> plan{oracle::z(0), oracle::z(2 * pairs - 1)};
  for (unsigned i = 0; i + 1 < pairs; ++i) plan.push_back(oracle::bell(2 * i + 1, 2 * i + 2));
  return oracle::distribution(pairs_state(initial), plan);
}

ChainSpec chain_spec(const std::vector<BellType>& initial, const oracle::Outcome& o) {
  ChainSpec spec;
  spec.is1 = initial.front();
  spec.is2 = initial.back();
  spec.intermediates.assign(initial.begin() + 1, initial.end() - 1);
  spec.zmr1 = o[0];
  spec.zmr2 = o[1];
  for (std::size_t i = 2; i < o.size(); ++i) spec.mrs.push_back(from_code2(o[i]));
  return spec;
}

std::vector<BellType> decode(std::uint32_t index, std::size_t k) {
  std::vector<BellType> out(k);
  for (std::size_t i = 0; i < k; ++i, index >>= 2) out[i] = from_code2(static_cast<std::uint8_t>(index & 3U));
  return out;
}

}  // namespace

TEST_CASE("two-bit codes") {
  CHECK(code2(BellType::PhiPlus) == 0b00);
  CHECK(code2(BellType::PsiMinus) == 0b11);
  CHECK(code2(BellType::PhiMinus) == 0b01);
  CHECK(code2(BellType::PsiPlus) == 0b10);
  for (BellType v : kAll) {
    CHECK(from_code2(code2(v)) == v);
    CHECK(parity(v) == (code2(v) >> 1));
    CHECK(from_parts(parity(v), sign(v)) == v);
    CHECK(parse_bell_type(to_string(v)) == v);
  }
  CHECK_FALSE(parse_bell_type("PHI").has_value());
}

TEST_CASE("parity of each label") {
  CHECK(parity(BellType::PsiPlus) == 1);
  CHECK(parity(BellType::PhiMinus) == 0);
  CHECK(parity(BellType::PsiMinus) == 1);
  CHECK(parity(BellType::PhiPlus) == 0);
}

TEST_CASE("xor rule examples") {
  using V = std::vector<BellType>;
  CHECK(xor_rule_holds(V{BellType::PhiPlus}, V{BellType::PhiPlus}));
  CHECK(xor_rule_holds(V{BellType::PhiPlus, BellType::PhiPlus}, V{BellType::PsiPlus, BellType::PsiPlus}));
  CHECK_FALSE(xor_rule_holds(V{BellType::PhiPlus, BellType::PhiPlus}, V{BellType::PsiPlus, BellType::PhiPlus}));
  CHECK_THROWS_AS(xor_rule_holds(V{}, V{}), std::invalid_argument);
  CHECK_THROWS_AS(xor_rule_holds(V{BellType::PhiPlus}, V{BellType::PhiPlus, BellType::PhiPlus}),
                  std::invalid_argument);
}

TEST_CASE("crossed measurement of two PhiPlus pairs only yields xor-consistent results") {
  const std::vector<BellType> initial{BellType::PhiPlus, BellType::PhiPlus};
  const auto dist = cycle_distribution(initial);
  CHECK(dist.count({code2(BellType::PsiPlus), code2(BellType::PsiPlus)}) == 1);
  CHECK(dist.size() == 4);
  for (const auto& [o, p] : dist) {
    CHECK(p == doctest::Approx(0.25));
    const std::vector<BellType> results{from_code2(o[0]), from_code2(o[1])};
    CHECK(xor_rule_holds(initial, results));
  }
}

TEST_CASE("collapse_partner") {
  CHECK(collapse_partner(BellType::PhiPlus, 0) == 0);
  CHECK(collapse_partner(BellType::PsiPlus, 0) == 1);
  CHECK(collapse_partner(BellType::PhiMinus, 1) == 1);
  CHECK_THROWS_AS(collapse_partner(BellType::PhiPlus, 2), std::invalid_argument);

  // Against the oracle: Z on both halves of every Bell state.
  for (BellType v : kAll) {
    const auto dist = oracle::distribution(pairs_state({v}), {oracle::z(0), oracle::z(1)});
    for (const auto& [o, p] : dist) CHECK(collapse_partner(v, o[0]) == o[1]);
  }
}

TEST_CASE("bm_parity") {
  CHECK(bm_parity(0, 1) == 1);
  CHECK(bm_parity(0, 0) == 0);
  CHECK(bm_parity(1, 1) == 0);
  // Bell measurement of each product state: parity fixed, sign uniform.
  for (unsigned z1 = 0; z1 < 2; ++z1) {
    for (unsigned z2 = 0; z2 < 2; ++z2) {
      oracle::State s(2);
      if (z1) s.x(0);
      if (z2) s.x(1);
      const auto dist = oracle::distribution(s, {oracle::bell(0, 1)});
      CHECK(dist.size() == 2);
      for (const auto& [o, p] : dist) {
        CHECK(parity(from_code2(o[0])) == bm_parity(static_cast<Bit>(z1), static_cast<Bit>(z2)));
        CHECK(p == doctest::Approx(0.5));
      }
    }
  }
}

TEST_CASE("chain relation examples") {
  ChainSpec s;
  s.zmr1 = 0;
  s.zmr2 = 1;
  s.mrs = {BellType::PsiPlus};
  CHECK(chain_relation_holds(s));

  s.intermediates = {BellType::PhiPlus};
  s.mrs = {BellType::PhiPlus, BellType::PsiPlus};
  CHECK(chain_relation_holds(s));

  ChainSpec t;
  t.is1 = BellType::PsiPlus;
  t.zmr1 = 0;
  t.zmr2 = 0;
  t.mrs = {BellType::PsiPlus};
  CHECK(chain_relation_holds(t));
  // The same outcome is reachable in the two-pair experiment.
  const auto dist = chain_distribution({BellType::PsiPlus, BellType::PhiPlus});
  CHECK(dist.count({0, 0, code2(BellType::PsiPlus)}) == 1);

  ChainSpec bad = s;
  bad.mrs.pop_back();
  CHECK_THROWS_AS(chain_relation_holds(bad), std::invalid_argument);
}

TEST_CASE("infer_remote_bit examples") {
  using V = std::vector<BellType>;
  CHECK(infer_remote_bit(1, BellType::PhiPlus, BellType::PhiPlus, V{}, V{BellType::PsiPlus}) == 0);
  CHECK(infer_remote_bit(1, BellType::PhiPlus, BellType::PhiPlus, V{}, V{BellType::PhiPlus}) == 1);
  CHECK(infer_remote_bit(0, BellType::PhiPlus, BellType::PhiPlus, V{BellType::PhiPlus},
                         V{BellType::PsiMinus, BellType::PhiMinus}) == 1);
  CHECK_THROWS_AS(infer_remote_bit(0, BellType::PhiPlus, BellType::PhiPlus, V{BellType::PhiPlus}, V{}),
                  std::invalid_argument);

  // The three-pair chain reaches zmr1=0 with mrs=[PSI-, PHI-] only with zmr2=1.
  const auto dist = chain_distribution({BellType::PhiPlus, BellType::PhiPlus, BellType::PhiPlus});
  const std::uint8_t psi_m = code2(BellType::PsiMinus);
  const std::uint8_t phi_m = code2(BellType::PhiMinus);
  CHECK(dist.count({0, 1, psi_m, phi_m}) == 1);
  CHECK(dist.count({0, 0, psi_m, phi_m}) == 0);
}

TEST_CASE("xor rule holds on every reachable cycle outcome, all initial states up to four pairs") {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::uint32_t idx = 0; idx < (1U << (2 * k)); ++idx) {
      const auto initial = decode(idx, k);
      const auto dist = cycle_distribution(initial);
      double total = 0.0;
      for (const auto& [o, p] : dist) {
        std::vector<BellType> results;
        for (auto c : o) results.push_back(from_code2(c));
        REQUIRE(xor_rule_holds(initial, results));
        total += p;
      }
      CHECK(total == doctest::Approx(1.0));
      // k pairs carry 2k bits of which the rule fixes two.
      CHECK(dist.size() == (std::size_t{1} << (2 * k - 2)));
    }
  }
}

TEST_CASE("chain relation holds on every reachable chain outcome, all initial states up to four pairs") {
  for (std::size_t pairs = 2; pairs <= 4; ++pairs) {
    for (std::uint32_t idx = 0; idx < (1U << (2 * pairs)); ++idx) {
      const auto initial = decode(idx, pairs);
      const auto dist = chain_distribution(initial);
      for (const auto& [o, p] : dist) {
        const auto spec = chain_spec(initial, o);
        REQUIRE(chain_relation_holds(spec));
        std::vector<BellType> mid(initial.begin() + 1, initial.end() - 1);
        CHECK(infer_remote_bit(spec.zmr1, initial.front(), initial.back(), mid, spec.mrs) == spec.zmr2);
        CHECK(infer_remote_bit(spec.zmr2, initial.back(), initial.front(), mid, spec.mrs) == spec.zmr1);
      }
      // zmr1 and every Bell label are free; zmr2 is then determined.
      CHECK(dist.size() == (std::size_t{2} << (2 * (pairs - 1))));
    }
  }
}

TEST_CASE("five-pair cycles and chains on sampled initial states") {
  // 4^5 initial states is too many for exhaustive amplitude enumeration here;
  // a fixed stride covers every label in every slot.
  for (std::uint32_t idx = 0; idx < 1024; idx += 37) {
    const auto initial = decode(idx, 5);
    for (const auto& [o, p] : cycle_distribution(initial)) {
      std::vector<BellType> results;
      for (auto c : o) results.push_back(from_code2(c));
      REQUIRE(xor_rule_holds(initial, results));
    }
    for (const auto& [o, p] : chain_distribution(initial)) REQUIRE(chain_relation_holds(chain_spec(initial, o)));
  }
}
