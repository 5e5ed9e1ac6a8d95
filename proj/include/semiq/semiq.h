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

#ifndef SEMIQ_SEMIQ_H_
#define SEMIQ_SEMIQ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SEMIQ_BUILDING_LIBRARY)
#define SEMIQ_API __declspec(dllexport)
#else
#define SEMIQ_API __declspec(dllimport)
#endif
#else
#define SEMIQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

// Every fallible call returns a status. On failure a description of the
// error is available from semiq_last_error() on the same thread until the
// next failing call.
typedef enum semiq_status {
  SEMIQ_OK = 0,
  SEMIQ_ERR_INVALID_ARGUMENT = 1,
  SEMIQ_ERR_CAPACITY = 2,
  SEMIQ_ERR_UNSUPPORTED = 3,
  SEMIQ_ERR_IO = 4,
  SEMIQ_ERR_INTERNAL = 5
} semiq_status;

SEMIQ_API const char* semiq_status_string(semiq_status status);
SEMIQ_API const char* semiq_last_error(void);
SEMIQ_API const char* semiq_version(void);

typedef enum semiq_backend { SEMIQ_BACKEND_DENSE = 0, SEMIQ_BACKEND_TABLEAU = 1 } semiq_backend;

typedef enum semiq_attack {
  SEMIQ_ATTACK_HONEST = 0,
  SEMIQ_ATTACK_NAIVE_MEASURE = 1,
  SEMIQ_ATTACK_PARITY_MEASURE = 2,
  SEMIQ_ATTACK_MODIFY = 3
} semiq_attack;

typedef enum semiq_gate { SEMIQ_GATE_X = 0, SEMIQ_GATE_Y = 1, SEMIQ_GATE_Z = 2, SEMIQ_GATE_H = 3 } semiq_gate;

// Command-line spellings: "dense"/"tableau", "honest"/"naive-measure"/
// "parity-measure"/"modify", "x"/"y"/"z"/"h", and "p/q" or a decimal for
// the privacy amplification ratio.
SEMIQ_API semiq_status semiq_parse_backend(const char* text, semiq_backend* out);
SEMIQ_API semiq_status semiq_parse_attack(const char* text, semiq_attack* out);
SEMIQ_API semiq_status semiq_parse_gate(const char* text, semiq_gate* out);
SEMIQ_API semiq_status semiq_parse_ratio(const char* text, uint32_t* num, uint32_t* den);

typedef struct semiq_config {
  uint32_t n;          // Bell pairs per trial, even and >= 2
  uint64_t trials;     // campaigns only
  uint64_t seed;       // master seed; a single run uses it directly
  semiq_backend backend;
  semiq_attack attack;
  semiq_gate gate;     // modify only
  uint32_t m;          // modify only: number of attacked qubits
  uint32_t pa_num;     // privacy amplification keeps floor(len * num / den) bits
  uint32_t pa_den;
  uint32_t threads;    // 0: one worker per hardware thread
} semiq_config;

// n=64, trials=100, seed=1, tableau, honest, gate x, m=1, ratio 1/2, threads 0.
SEMIQ_API void semiq_config_init(semiq_config* config);

// Owned, NUL-terminated text returned by several calls.
typedef struct semiq_text semiq_text;
SEMIQ_API const char* semiq_text_data(const semiq_text* text);
SEMIQ_API size_t semiq_text_size(const semiq_text* text);
SEMIQ_API void semiq_text_free(semiq_text* text);

typedef enum semiq_run_status { SEMIQ_COMPLETED = 0, SEMIQ_ABORTED = 1 } semiq_run_status;
typedef enum semiq_abort_stage { SEMIQ_ABORT_NONE = -1, SEMIQ_ABORT_CASE2 = 0, SEMIQ_ABORT_CASE4 = 1 } semiq_abort_stage;
typedef enum semiq_component_kind { SEMIQ_COMPONENT_CYCLE = 0, SEMIQ_COMPONENT_CHAIN = 1 } semiq_component_kind;

typedef struct semiq_trial_stats {
  uint64_t trial_id;
  uint32_t n;
  int32_t status;              // semiq_run_status
  int32_t abort_stage;         // semiq_abort_stage
  int32_t abort_kind;          // semiq_component_kind, -1 without abort
  uint32_t abort_component;
  uint32_t raw_key_len;        // completed trials only
  uint32_t final_key_len;
  int32_t keys_match;
  uint32_t case1_bits;
  uint32_t case3_bits;
  uint32_t case4_disclosed_bits;
  uint32_t cycle_components;
  uint32_t chain_components;
  uint64_t qubit_total;
  double elapsed_ms;
  uint32_t cycle_checks_passed;
  uint32_t chain_checks;
  uint32_t chain_checks_passed;
  uint32_t attacked_qubits;
  uint32_t attacked_case1;
  uint32_t attacked_endpoints;
  uint32_t attacked_case4;
  uint32_t tp_known_case3_bits;
} semiq_trial_stats;

typedef struct semiq_summary {
  uint64_t trials;
  uint64_t completed;
  uint64_t aborted;
  uint64_t mismatched;
  double detection_rate;
  double mismatch_rate;
  double mean_raw_key;
  double raw_key_stderr;
  double mean_final_key;
  double qubit_efficiency;
  double qubit_efficiency_stderr;
} semiq_summary;

typedef struct semiq_component_tally {
  int32_t kind;  // semiq_component_kind
  uint32_t length;
  uint64_t checked;
  uint64_t passed;
} semiq_component_tally;

// ---- campaigns

typedef struct semiq_campaign semiq_campaign;

SEMIQ_API semiq_status semiq_campaign_run(const semiq_config* config, semiq_campaign** out);
SEMIQ_API void semiq_campaign_free(semiq_campaign* campaign);
SEMIQ_API semiq_status semiq_campaign_summary(const semiq_campaign* campaign, semiq_summary* out);
SEMIQ_API semiq_status semiq_campaign_trial(const semiq_campaign* campaign, uint64_t index, semiq_trial_stats* out);
SEMIQ_API semiq_status semiq_campaign_tally_count(const semiq_campaign* campaign, size_t* out);
SEMIQ_API semiq_status semiq_campaign_tally(const semiq_campaign* campaign, size_t index, semiq_component_tally* out);
// Writes the per-trial CSV to `path`. The elapsed_ms column stays empty
// unless include_timing is nonzero.
SEMIQ_API semiq_status semiq_campaign_write_csv(const semiq_campaign* campaign, const char* path, int include_timing);
SEMIQ_API semiq_status semiq_campaign_csv(const semiq_campaign* campaign, int include_timing, semiq_text** out);
SEMIQ_API semiq_status semiq_campaign_summary_text(const semiq_campaign* campaign, semiq_text** out);

// ---- single runs

typedef struct semiq_run semiq_run;

SEMIQ_API semiq_status semiq_simulate(const semiq_config* config, semiq_run** out);
SEMIQ_API void semiq_run_free(semiq_run* run);
SEMIQ_API semiq_status semiq_run_stats(const semiq_run* run, semiq_trial_stats* out);
SEMIQ_API semiq_status semiq_run_transcript(const semiq_run* run, semiq_text** out);

typedef enum semiq_party { SEMIQ_ALICE = 0, SEMIQ_BOB = 1 } semiq_party;
typedef enum semiq_key_stage { SEMIQ_KEY_RAW = 0, SEMIQ_KEY_FINAL = 1 } semiq_key_stage;

// Copies up to `capacity` key bits (one per byte) into `bits` and stores the
// full length in *length. Pass capacity 0 to query the length.
SEMIQ_API semiq_status semiq_run_key(const semiq_run* run, semiq_party party, semiq_key_stage stage, uint8_t* bits,
                                     size_t capacity, size_t* length);

// Re-derives the abort decision from the public transcript alone and sets
// *consistent to 1 when it agrees with the recorded outcome.
SEMIQ_API semiq_status semiq_transcript_verify(const char* transcript, int* consistent);

// ---- backend cross-check

typedef struct semiq_verify_report semiq_verify_report;

SEMIQ_API semiq_status semiq_verify_backends(uint32_t max_qubits, uint64_t samples, uint64_t seed,
                                             semiq_verify_report** out);
SEMIQ_API void semiq_verify_report_free(semiq_verify_report* report);
SEMIQ_API semiq_status semiq_verify_report_passed(const semiq_verify_report* report, int* passed);
SEMIQ_API semiq_status semiq_verify_report_circuit_count(const semiq_verify_report* report, size_t* out);
SEMIQ_API semiq_status semiq_verify_report_text(const semiq_verify_report* report, semiq_text** out);

// ---- analytic curves

SEMIQ_API double semiq_curve_measurement(uint32_t t);
SEMIQ_API double semiq_curve_modification(uint32_t m);

// CSV for x in [first, last]. With `empirical` nonzero, also runs campaigns
// from `config` (n, trials, seed, backend, gate, threads): one modification
// campaign per x and one naive-measurement campaign binned by key bits.
SEMIQ_API semiq_status semiq_curves_csv(uint32_t first, uint32_t last, int empirical, const semiq_config* config,
                                        semiq_text** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // SEMIQ_SEMIQ_H_
