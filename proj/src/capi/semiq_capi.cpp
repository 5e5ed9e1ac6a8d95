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

#include "semiq/semiq.h"

#include <exception>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adversary/strategy.hpp"
#include "errors.hpp"
#include "harness/campaign.hpp"
#include "harness/curves.hpp"
#include "harness/verify_backends.hpp"
#include "protocol/run.hpp"
#include "protocol/steps.hpp"
#include "protocol/transcript.hpp"

struct semiq_text {
  std::string value;
};

struct semiq_campaign {
  semiq::harness::CampaignResult result;
};

struct semiq_run {
  semiq::protocol::RunResult result;
};

struct semiq_verify_report {
  semiq::harness::VerifyReport report;
};

namespace {

using namespace semiq;

thread_local std::string last_error;

semiq_status fail(semiq_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps the exception in flight to a status code.
semiq_status translate() {
  try {
    throw;
  } catch (const CapacityError& e) {
    return fail(SEMIQ_ERR_CAPACITY, e.what());
  } catch (const UnsupportedOperation& e) {
    return fail(SEMIQ_ERR_UNSUPPORTED, e.what());
  } catch (const IoError& e) {
    return fail(SEMIQ_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SEMIQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SEMIQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SEMIQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SEMIQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SEMIQ_ERR_INTERNAL, "unknown error");
  }
}

template <typename F>
semiq_status guarded(F&& body) {
  try {
    body();
    return SEMIQ_OK;
  } catch (...) {
    return translate();
  }
}

#define SEMIQ_REQUIRE(ptr)                                                          \
  do {                                                                              \
    if ((ptr) == nullptr) return fail(SEMIQ_ERR_INVALID_ARGUMENT, #ptr " is null"); \
  } while (0)

engine::Backend to_backend(semiq_backend b) {
  switch (b) {
    case SEMIQ_BACKEND_DENSE:
      return engine::Backend::Dense;
    case SEMIQ_BACKEND_TABLEAU:
      return engine::Backend::Tableau;
  }
  throw std::invalid_argument("unknown backend " + std::to_string(static_cast<int>(b)));
}

engine::Gate to_gate(semiq_gate g) {
  switch (g) {
    case SEMIQ_GATE_X:
      return engine::Gate::X;
    case SEMIQ_GATE_Y:
      return engine::Gate::Y;
    case SEMIQ_GATE_Z:
      return engine::Gate::Z;
    case SEMIQ_GATE_H:
      return engine::Gate::H;
  }
  throw std::invalid_argument("unknown gate " + std::to_string(static_cast<int>(g)));
}

adversary::TpStrategy to_strategy(const semiq_config& c) {
  switch (c.attack) {
    case SEMIQ_ATTACK_HONEST:
      return adversary::TpStrategy::honest();
    case SEMIQ_ATTACK_NAIVE_MEASURE:
      return adversary::TpStrategy::naive_measure();
    case SEMIQ_ATTACK_PARITY_MEASURE:
      return adversary::TpStrategy::parity_aware_measure();
    case SEMIQ_ATTACK_MODIFY:
      return adversary::TpStrategy::modification(to_gate(c.gate), c.m);
  }
  throw std::invalid_argument("unknown attack " + std::to_string(static_cast<int>(c.attack)));
}

pa::Ratio to_ratio(const semiq_config& c) {
  pa::Ratio r{c.pa_num, c.pa_den};
  if (!r.valid()) {
    throw std::invalid_argument("privacy amplification ratio " + std::to_string(c.pa_num) + "/" +
                                std::to_string(c.pa_den) + " is outside (0, 1]");
  }
  return r;
}

harness::CampaignConfig to_campaign(const semiq_config& c) {
  harness::CampaignConfig out;
  out.n = c.n;
  out.trials = c.trials;
  out.strategy = to_strategy(c);
  out.master_seed = c.seed;
  out.backend = to_backend(c.backend);
  out.pa_ratio = to_ratio(c);
  out.threads = c.threads;
  return out;
}

void export_stats(const protocol::RunStats& s, semiq_trial_stats* out) {
  *out = semiq_trial_stats{};
  out->trial_id = s.trial_id;
  out->n = s.n;
  out->status = s.status == protocol::Status::Completed ? SEMIQ_COMPLETED : SEMIQ_ABORTED;
  out->abort_stage = SEMIQ_ABORT_NONE;
  out->abort_kind = -1;
  if (s.abort) {
    out->abort_stage = s.abort->stage == protocol::AbortStage::Case2 ? SEMIQ_ABORT_CASE2 : SEMIQ_ABORT_CASE4;
    out->abort_kind = s.abort->kind == protocol::ComponentKind::Cycle ? SEMIQ_COMPONENT_CYCLE : SEMIQ_COMPONENT_CHAIN;
    out->abort_component = s.abort->component;
  }
  out->raw_key_len = s.raw_key_len;
  out->final_key_len = s.final_key_len;
  out->keys_match = s.keys_match ? 1 : 0;
  out->case1_bits = s.case1_bits;
  out->case3_bits = s.case3_bits;
  out->case4_disclosed_bits = s.case4_disclosed_bits;
  out->cycle_components = s.cycle_components;
  out->chain_components = s.chain_components;
  out->qubit_total = s.qubit_total;
  out->elapsed_ms = s.elapsed_ms;
  out->cycle_checks_passed = s.cycle_checks_passed;
  out->chain_checks = s.chain_checks;
  out->chain_checks_passed = s.chain_checks_passed;
  out->attacked_qubits = s.attacked_qubits;
  out->attacked_case1 = s.attacked_case1;
  out->attacked_endpoints = s.attacked_endpoints;
  out->attacked_case4 = s.attacked_case4;
  out->tp_known_case3_bits = s.tp_known_case3_bits;
}

semiq_text* make_text(std::string value) { return new semiq_text{std::move(value)}; }

}  // namespace

extern "C" {

const char* semiq_status_string(semiq_status status) {
  switch (status) {
    case SEMIQ_OK:
      return "ok";
    case SEMIQ_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SEMIQ_ERR_CAPACITY:
      return "capacity exceeded";
    case SEMIQ_ERR_UNSUPPORTED:
      return "unsupported operation";
    case SEMIQ_ERR_IO:
      return "i/o error";
    case SEMIQ_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* semiq_last_error(void) { return last_error.c_str(); }

const char* semiq_version(void) { return "0.1.0"; }

semiq_status semiq_parse_backend(const char* text, semiq_backend* out) {
  SEMIQ_REQUIRE(text);
  SEMIQ_REQUIRE(out);
  auto b = engine::parse_backend(text);
  if (!b) return fail(SEMIQ_ERR_INVALID_ARGUMENT, std::string("unknown backend '") + text + "'");
  *out = *b == engine::Backend::Dense ? SEMIQ_BACKEND_DENSE : SEMIQ_BACKEND_TABLEAU;
  return SEMIQ_OK;
}

semiq_status semiq_parse_attack(const char* text, semiq_attack* out) {
  SEMIQ_REQUIRE(text);
  SEMIQ_REQUIRE(out);
  return guarded([&] {
    switch (adversary::TpStrategy::from_name(text).kind()) {
      case adversary::StrategyKind::Honest:
        *out = SEMIQ_ATTACK_HONEST;
        break;
      case adversary::StrategyKind::NaiveMeasure:
        *out = SEMIQ_ATTACK_NAIVE_MEASURE;
        break;
      case adversary::StrategyKind::ParityAwareMeasure:
        *out = SEMIQ_ATTACK_PARITY_MEASURE;
        break;
      case adversary::StrategyKind::Modification:
        *out = SEMIQ_ATTACK_MODIFY;
        break;
    }
  });
}

semiq_status semiq_parse_gate(const char* text, semiq_gate* out) {
  SEMIQ_REQUIRE(text);
  SEMIQ_REQUIRE(out);
  auto g = engine::parse_gate(text);
  if (!g) return fail(SEMIQ_ERR_INVALID_ARGUMENT, std::string("unknown gate '") + text + "'");
  *out = static_cast<semiq_gate>(static_cast<int>(*g));
  return SEMIQ_OK;
}

semiq_status semiq_parse_ratio(const char* text, uint32_t* num, uint32_t* den) {
  SEMIQ_REQUIRE(text);
  SEMIQ_REQUIRE(num);
  SEMIQ_REQUIRE(den);
  auto r = pa::parse_ratio(text);
  if (!r) return fail(SEMIQ_ERR_INVALID_ARGUMENT, std::string("ratio '") + text + "' is not in (0, 1]");
  *num = r->num;
  *den = r->den;
  return SEMIQ_OK;
}

void semiq_config_init(semiq_config* config) {
  if (config == nullptr) return;
  *config = semiq_config{};
  config->n = 64;
  config->trials = 100;
  config->seed = 1;
  config->backend = SEMIQ_BACKEND_TABLEAU;
  config->attack = SEMIQ_ATTACK_HONEST;
  config->gate = SEMIQ_GATE_X;
  config->m = 1;
  config->pa_num = 1;
  config->pa_den = 2;
  config->threads = 0;
}

const char* semiq_text_data(const semiq_text* text) { return text ? text->value.c_str() : ""; }
size_t semiq_text_size(const semiq_text* text) { return text ? text->value.size() : 0; }
void semiq_text_free(semiq_text* text) { delete text; }

semiq_status semiq_campaign_run(const semiq_config* config, semiq_campaign** out) {
  SEMIQ_REQUIRE(config);
  SEMIQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new semiq_campaign{harness::run_campaign(to_campaign(*config))}; });
}

void semiq_campaign_free(semiq_campaign* campaign) { delete campaign; }

semiq_status semiq_campaign_summary(const semiq_campaign* campaign, semiq_summary* out) {
  SEMIQ_REQUIRE(campaign);
  SEMIQ_REQUIRE(out);
  const auto& s = campaign->result.summary;
  *out = semiq_summary{s.trials,       s.completed,      s.aborted,          s.mismatched,
                       s.detection_rate, s.mismatch_rate, s.mean_raw_key,     s.raw_key_stderr,
                       s.mean_final_key, s.qubit_efficiency, s.qubit_efficiency_stderr};
  return SEMIQ_OK;
}

semiq_status semiq_campaign_trial(const semiq_campaign* campaign, uint64_t index, semiq_trial_stats* out) {
  SEMIQ_REQUIRE(campaign);
  SEMIQ_REQUIRE(out);
  const auto& trials = campaign->result.trials;
  if (index >= trials.size()) {
    return fail(SEMIQ_ERR_INVALID_ARGUMENT,
                "trial index " + std::to_string(index) + " out of range (" + std::to_string(trials.size()) + ")");
  }
  export_stats(trials[index], out);
  return SEMIQ_OK;
}

semiq_status semiq_campaign_tally_count(const semiq_campaign* campaign, size_t* out) {
  SEMIQ_REQUIRE(campaign);
  SEMIQ_REQUIRE(out);
  *out = campaign->result.tallies.size();
  return SEMIQ_OK;
}

semiq_status semiq_campaign_tally(const semiq_campaign* campaign, size_t index, semiq_component_tally* out) {
  SEMIQ_REQUIRE(campaign);
  SEMIQ_REQUIRE(out);
  const auto& tallies = campaign->result.tallies;
  if (index >= tallies.size()) {
    return fail(SEMIQ_ERR_INVALID_ARGUMENT, "tally index " + std::to_string(index) + " out of range");
  }
  const auto& t = tallies[index];
  out->kind = t.kind == protocol::ComponentKind::Cycle ? SEMIQ_COMPONENT_CYCLE : SEMIQ_COMPONENT_CHAIN;
  out->length = t.length;
  out->checked = t.checked;
  out->passed = t.passed;
  return SEMIQ_OK;
}

semiq_status semiq_campaign_write_csv(const semiq_campaign* campaign, const char* path, int include_timing) {
  SEMIQ_REQUIRE(campaign);
  SEMIQ_REQUIRE(path);
  return guarded([&] { harness::emit_csv(campaign->result.trials, path, include_timing != 0); });
}

semiq_status semiq_campaign_csv(const semiq_campaign* campaign, int include_timing, semiq_text** out) {
  SEMIQ_REQUIRE(campaign);
  SEMIQ_REQUIRE(out);
  return guarded([&] {
    std::ostringstream csv;
    harness::write_csv(csv, campaign->result.trials, include_timing != 0);
    *out = make_text(csv.str());
  });
}

semiq_status semiq_campaign_summary_text(const semiq_campaign* campaign, semiq_text** out) {
  SEMIQ_REQUIRE(campaign);
  SEMIQ_REQUIRE(out);
  return guarded([&] { *out = make_text(harness::format_summary(campaign->result.summary)); });
}

semiq_status semiq_simulate(const semiq_config* config, semiq_run** out) {
  SEMIQ_REQUIRE(config);
  SEMIQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    protocol::ProtocolConfig pc{config->n, config->seed, to_backend(config->backend), to_ratio(*config)};
    *out = new semiq_run{protocol::run_protocol(pc, to_strategy(*config))};
  });
}

void semiq_run_free(semiq_run* run) { delete run; }

semiq_status semiq_run_stats(const semiq_run* run, semiq_trial_stats* out) {
  SEMIQ_REQUIRE(run);
  SEMIQ_REQUIRE(out);
  export_stats(run->result.stats, out);
  return SEMIQ_OK;
}

semiq_status semiq_run_transcript(const semiq_run* run, semiq_text** out) {
  SEMIQ_REQUIRE(run);
  SEMIQ_REQUIRE(out);
  return guarded([&] { *out = make_text(run->result.transcript.serialize()); });
}

semiq_status semiq_run_key(const semiq_run* run, semiq_party party, semiq_key_stage stage, uint8_t* bits,
                           size_t capacity, size_t* length) {
  SEMIQ_REQUIRE(run);
  SEMIQ_REQUIRE(length);
  if (capacity > 0 && bits == nullptr) return fail(SEMIQ_ERR_INVALID_ARGUMENT, "bits is null");
  const auto& o = run->result.outcome;
  const std::vector<bell::Bit>* key = nullptr;
  if (party == SEMIQ_ALICE) {
    key = stage == SEMIQ_KEY_RAW ? &o.raw_alice : &o.key_alice;
  } else if (party == SEMIQ_BOB) {
    key = stage == SEMIQ_KEY_RAW ? &o.raw_bob : &o.key_bob;
  } else {
    return fail(SEMIQ_ERR_INVALID_ARGUMENT, "unknown party");
  }
  *length = key->size();
  for (size_t i = 0; i < key->size() && i < capacity; ++i) bits[i] = (*key)[i];
  return SEMIQ_OK;
}

semiq_status semiq_transcript_verify(const char* transcript, int* consistent) {
  SEMIQ_REQUIRE(transcript);
  SEMIQ_REQUIRE(consistent);
  return guarded([&] {
    *consistent = protocol::verify_transcript(protocol::Transcript::parse(transcript)).consistent ? 1 : 0;
  });
}

semiq_status semiq_verify_backends(uint32_t max_qubits, uint64_t samples, uint64_t seed, semiq_verify_report** out) {
  SEMIQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new semiq_verify_report{harness::verify_backends(max_qubits, samples, seed)}; });
}

void semiq_verify_report_free(semiq_verify_report* report) { delete report; }

semiq_status semiq_verify_report_passed(const semiq_verify_report* report, int* passed) {
  SEMIQ_REQUIRE(report);
  SEMIQ_REQUIRE(passed);
  *passed = report->report.pass ? 1 : 0;
  return SEMIQ_OK;
}

semiq_status semiq_verify_report_circuit_count(const semiq_verify_report* report, size_t* out) {
  SEMIQ_REQUIRE(report);
  SEMIQ_REQUIRE(out);
  *out = report->report.circuits.size();
  return SEMIQ_OK;
}

semiq_status semiq_verify_report_text(const semiq_verify_report* report, semiq_text** out) {
  SEMIQ_REQUIRE(report);
  SEMIQ_REQUIRE(out);
  return guarded([&] { *out = make_text(harness::format_report(report->report)); });
}

double semiq_curve_measurement(uint32_t t) { return harness::measurement_attack_curve(t); }

double semiq_curve_modification(uint32_t m) { return harness::modification_attack_curve(m); }

semiq_status semiq_curves_csv(uint32_t first, uint32_t last, int empirical, const semiq_config* config,
                              semiq_text** out) {
  SEMIQ_REQUIRE(out);
  if (empirical) SEMIQ_REQUIRE(config);
  return guarded([&] {
    auto rows = harness::analytic_curves(first, last);
    if (empirical) {
      harness::EmpiricalCurveConfig ec;
      ec.n = config->n;
      ec.trials = config->trials;
      ec.master_seed = config->seed;
      ec.backend = to_backend(config->backend);
      ec.gate = to_gate(config->gate);
      ec.threads = config->threads;
      harness::add_empirical(rows, ec);
    }
    *out = make_text(harness::format_curves_csv(rows));
  });
}

}  // extern "C"
