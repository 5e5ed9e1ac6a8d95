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

// Exercises the shared library through its C interface only.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "semiq/semiq.h"

namespace {

std::string take(semiq_text* t) {
  std::string s(semiq_text_data(t), semiq_text_size(t));
  semiq_text_free(t);
  return s;
}

semiq_config small_config() {
  semiq_config c;
  semiq_config_init(&c);
  c.n = 16;
  c.trials = 20;
  c.threads = 1;
  return c;
}

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(semiq_status_string(SEMIQ_OK)) == "ok");
  CHECK(std::string(semiq_status_string(SEMIQ_ERR_CAPACITY)).size() > 0);
  CHECK(std::string(semiq_version()) == "0.1.0");
}

TEST_CASE("config defaults") {
  semiq_config c;
  std::memset(&c, 0xff, sizeof(c));
  semiq_config_init(&c);
  CHECK(c.n == 64);
  CHECK(c.trials == 100);
  CHECK(c.seed == 1);
  CHECK(c.backend == SEMIQ_BACKEND_TABLEAU);
  CHECK(c.attack == SEMIQ_ATTACK_HONEST);
  CHECK(c.gate == SEMIQ_GATE_X);
  CHECK(c.m == 1);
  CHECK(c.pa_num == 1);
  CHECK(c.pa_den == 2);
  CHECK(c.threads == 0);
}

TEST_CASE("parsers") {
  semiq_backend b;
  CHECK(semiq_parse_backend("dense", &b) == SEMIQ_OK);
  CHECK(b == SEMIQ_BACKEND_DENSE);
  CHECK(semiq_parse_backend("tableau", &b) == SEMIQ_OK);
  CHECK(b == SEMIQ_BACKEND_TABLEAU);
  CHECK(semiq_parse_backend("gpu", &b) == SEMIQ_ERR_INVALID_ARGUMENT);

  semiq_attack a;
  CHECK(semiq_parse_attack("parity-measure", &a) == SEMIQ_OK);
  CHECK(a == SEMIQ_ATTACK_PARITY_MEASURE);
  CHECK(semiq_parse_attack("naive-measure", &a) == SEMIQ_OK);
  CHECK(a == SEMIQ_ATTACK_NAIVE_MEASURE);
  CHECK(semiq_parse_attack("bogus", &a) == SEMIQ_ERR_INVALID_ARGUMENT);

  semiq_gate g;
  CHECK(semiq_parse_gate("H", &g) == SEMIQ_OK);
  CHECK(g == SEMIQ_GATE_H);
  CHECK(semiq_parse_gate("T", &g) == SEMIQ_ERR_INVALID_ARGUMENT);

  uint32_t num = 0, den = 0;
  CHECK(semiq_parse_ratio("3/4", &num, &den) == SEMIQ_OK);
  CHECK(num == 3);
  CHECK(den == 4);
  CHECK(semiq_parse_ratio("5/4", &num, &den) == SEMIQ_ERR_INVALID_ARGUMENT);
  CHECK(semiq_parse_ratio(nullptr, &num, &den) == SEMIQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("invalid arguments are reported with a message") {
  semiq_config c = small_config();
  c.n = 7;
  semiq_run* run = nullptr;
  CHECK(semiq_simulate(&c, &run) == SEMIQ_ERR_INVALID_ARGUMENT);
  CHECK(run == nullptr);
  CHECK(std::string(semiq_last_error()).find('7') != std::string::npos);

  CHECK(semiq_simulate(nullptr, &run) == SEMIQ_ERR_INVALID_ARGUMENT);
  c = small_config();
  CHECK(semiq_simulate(&c, nullptr) == SEMIQ_ERR_INVALID_ARGUMENT);

  c.attack = SEMIQ_ATTACK_MODIFY;
  c.m = 17;
  semiq_campaign* camp = nullptr;
  CHECK(semiq_campaign_run(&c, &camp) == SEMIQ_ERR_INVALID_ARGUMENT);
  CHECK(camp == nullptr);

  c = small_config();
  c.pa_num = 0;
  CHECK(semiq_simulate(&c, &run) == SEMIQ_ERR_INVALID_ARGUMENT);

  semiq_run_free(nullptr);
  semiq_campaign_free(nullptr);
  semiq_verify_report_free(nullptr);
  semiq_text_free(nullptr);
}

TEST_CASE("capacity and io errors") {
  semiq_verify_report* rep = nullptr;
  CHECK(semiq_verify_backends(30, 10, 1, &rep) == SEMIQ_ERR_CAPACITY);
  CHECK(rep == nullptr);
  CHECK(std::string(semiq_last_error()).size() > 0);

  semiq_config c = small_config();
  c.backend = SEMIQ_BACKEND_DENSE;
  c.n = 16;  // 32 qubits exceed the dense statevector
  semiq_run* run = nullptr;
  CHECK(semiq_simulate(&c, &run) == SEMIQ_ERR_CAPACITY);

  c = small_config();
  semiq_campaign* camp = nullptr;
  REQUIRE(semiq_campaign_run(&c, &camp) == SEMIQ_OK);
  CHECK(semiq_campaign_write_csv(camp, "/nonexistent/dir/out.csv", 0) == SEMIQ_ERR_IO);
  CHECK(std::string(semiq_last_error()).find("/nonexistent/dir/out.csv") != std::string::npos);
  semiq_campaign_free(camp);
}

TEST_CASE("single run: stats, keys and transcript") {
  semiq_config c = small_config();
  c.seed = 5;
  semiq_run* run = nullptr;
  REQUIRE(semiq_simulate(&c, &run) == SEMIQ_OK);

  semiq_trial_stats s;
  REQUIRE(semiq_run_stats(run, &s) == SEMIQ_OK);
  CHECK(s.status == SEMIQ_COMPLETED);
  CHECK(s.abort_stage == SEMIQ_ABORT_NONE);
  CHECK(s.keys_match == 1);
  CHECK(s.qubit_total == 32);
  CHECK(s.raw_key_len == s.case1_bits + s.case3_bits);

  size_t len = 0;
  REQUIRE(semiq_run_key(run, SEMIQ_ALICE, SEMIQ_KEY_RAW, nullptr, 0, &len) == SEMIQ_OK);
  CHECK(len == s.raw_key_len);
  std::vector<uint8_t> a(len), b(len);
  REQUIRE(semiq_run_key(run, SEMIQ_ALICE, SEMIQ_KEY_RAW, a.data(), a.size(), &len) == SEMIQ_OK);
  REQUIRE(semiq_run_key(run, SEMIQ_BOB, SEMIQ_KEY_RAW, b.data(), b.size(), &len) == SEMIQ_OK);
  CHECK(a == b);
  for (uint8_t bit : a) CHECK(bit <= 1);
  REQUIRE(semiq_run_key(run, SEMIQ_BOB, SEMIQ_KEY_FINAL, nullptr, 0, &len) == SEMIQ_OK);
  CHECK(len == s.final_key_len);
  CHECK(len == s.raw_key_len / 2);

  semiq_text* t = nullptr;
  REQUIRE(semiq_run_transcript(run, &t) == SEMIQ_OK);
  const std::string transcript = take(t);
  CHECK(transcript.find("MR") != std::string::npos);
  int consistent = 0;
  REQUIRE(semiq_transcript_verify(transcript.c_str(), &consistent) == SEMIQ_OK);
  CHECK(consistent == 1);
  CHECK(semiq_transcript_verify("not a transcript", &consistent) == SEMIQ_ERR_INVALID_ARGUMENT);
  semiq_run_free(run);

  // Replay with the same seed.
  semiq_run* again = nullptr;
  REQUIRE(semiq_simulate(&c, &again) == SEMIQ_OK);
  REQUIRE(semiq_run_transcript(again, &t) == SEMIQ_OK);
  CHECK(take(t) == transcript);
  semiq_run_free(again);
}

TEST_CASE("campaign accessors") {
  semiq_config c = small_config();
  c.attack = SEMIQ_ATTACK_NAIVE_MEASURE;
  c.trials = 50;
  semiq_campaign* camp = nullptr;
  REQUIRE(semiq_campaign_run(&c, &camp) == SEMIQ_OK);

  semiq_summary sum;
  REQUIRE(semiq_campaign_summary(camp, &sum) == SEMIQ_OK);
  CHECK(sum.trials == 50);
  CHECK(sum.aborted + sum.completed == 50);
  CHECK(sum.aborted > 0);

  uint64_t aborted = 0;
  for (uint64_t i = 0; i < 50; ++i) {
    semiq_trial_stats s;
    REQUIRE(semiq_campaign_trial(camp, i, &s) == SEMIQ_OK);
    CHECK(s.trial_id == i);
    if (s.status == SEMIQ_ABORTED) {
      ++aborted;
      CHECK(s.abort_stage != SEMIQ_ABORT_NONE);
      CHECK(s.abort_kind >= 0);
    }
  }
  CHECK(aborted == sum.aborted);
  semiq_trial_stats s;
  CHECK(semiq_campaign_trial(camp, 50, &s) == SEMIQ_ERR_INVALID_ARGUMENT);

  size_t tallies = 0;
  REQUIRE(semiq_campaign_tally_count(camp, &tallies) == SEMIQ_OK);
  CHECK(tallies > 0);
  semiq_component_tally tally;
  REQUIRE(semiq_campaign_tally(camp, 0, &tally) == SEMIQ_OK);
  CHECK(tally.passed <= tally.checked);
  CHECK(semiq_campaign_tally(camp, tallies, &tally) == SEMIQ_ERR_INVALID_ARGUMENT);

  semiq_text* t = nullptr;
  REQUIRE(semiq_campaign_csv(camp, 0, &t) == SEMIQ_OK);
  const std::string csv = take(t);
  CHECK(csv.rfind("trial_id,n,strategy,", 0) == 0);
  REQUIRE(semiq_campaign_summary_text(camp, &t) == SEMIQ_OK);
  CHECK(take(t).find("trials=50") != std::string::npos);

  const char* path = "capi_test_out.csv";
  REQUIRE(semiq_campaign_write_csv(camp, path, 0) == SEMIQ_OK);
  FILE* f = std::fopen(path, "rb");
  REQUIRE(f != nullptr);
  std::string on_disk;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), f)) > 0) on_disk.append(buf, got);
  std::fclose(f);
  std::remove(path);
  CHECK(on_disk == csv);
  semiq_campaign_free(camp);
}

TEST_CASE("backend verification and curves") {
  semiq_verify_report* rep = nullptr;
  REQUIRE(semiq_verify_backends(4, 500, 2, &rep) == SEMIQ_OK);
  int passed = 0;
  REQUIRE(semiq_verify_report_passed(rep, &passed) == SEMIQ_OK);
  CHECK(passed == 1);
  size_t count = 0;
  REQUIRE(semiq_verify_report_circuit_count(rep, &count) == SEMIQ_OK);
  CHECK(count > 0);
  semiq_text* t = nullptr;
  REQUIRE(semiq_verify_report_text(rep, &t) == SEMIQ_OK);
  CHECK(take(t).find("overall=PASS") != std::string::npos);
  semiq_verify_report_free(rep);

  CHECK(semiq_curve_measurement(1) == doctest::Approx(0.34375));
  CHECK(semiq_curve_modification(1) == doctest::Approx(0.5));
  REQUIRE(semiq_curves_csv(0, 2, 0, nullptr, &t) == SEMIQ_OK);
  const std::string csv = take(t);
  CHECK(csv.find("\n2,") != std::string::npos);
  CHECK(semiq_curves_csv(3, 2, 0, nullptr, &t) == SEMIQ_ERR_INVALID_ARGUMENT);
  CHECK(semiq_curves_csv(1, 2, 1, nullptr, &t) == SEMIQ_ERR_INVALID_ARGUMENT);
}
