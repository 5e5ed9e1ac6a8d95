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

// Command-line front end. Everything goes through the C API in semiq.h.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semiq/semiq.h"

namespace {

struct CliError {
  semiq_status status;
  std::string message;
};

void check(semiq_status status) {
  if (status != SEMIQ_OK) throw CliError{status, semiq_last_error()};
}

// RAII holders for the opaque handles.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};
using Text = Handle<semiq_text, semiq_text_free>;
using Campaign = Handle<semiq_campaign, semiq_campaign_free>;
using Run = Handle<semiq_run, semiq_run_free>;
using Report = Handle<semiq_verify_report, semiq_verify_report_free>;

struct Options {
  uint32_t n = 64;
  uint64_t trials = 100;
  std::string attack = "honest";
  std::string gate = "x";
  uint32_t m = 1;
  uint64_t seed = 1;
  std::string backend = "tableau";
  std::string pa_ratio = "1/2";
  std::string out;
  uint32_t threads = 0;
  bool timing = false;
  // verify-backends
  uint32_t max_qubits = 12;
  uint64_t samples = 10000;
  // curves
  uint32_t from = 0;
  uint32_t to = 16;
  bool empirical = false;
};

semiq_config make_config(const Options& o) {
  semiq_config c;
  semiq_config_init(&c);
  c.n = o.n;
  c.trials = o.trials;
  c.seed = o.seed;
  c.m = o.m;
  c.threads = o.threads;
  check(semiq_parse_attack(o.attack.c_str(), &c.attack));
  check(semiq_parse_gate(o.gate.c_str(), &c.gate));
  check(semiq_parse_backend(o.backend.c_str(), &c.backend));
  check(semiq_parse_ratio(o.pa_ratio.c_str(), &c.pa_num, &c.pa_den));
  return c;
}

void write_output(const std::string& path, const semiq_text* text) {
  if (path.empty() || path == "-") {
    std::fwrite(semiq_text_data(text), 1, semiq_text_size(text), stdout);
    return;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) throw CliError{SEMIQ_ERR_IO, "cannot open '" + path + "' for writing"};
  const size_t size = semiq_text_size(text);
  const bool ok = std::fwrite(semiq_text_data(text), 1, size, f) == size;
  if (std::fclose(f) != 0 || !ok) throw CliError{SEMIQ_ERR_IO, "failed while writing '" + path + "'"};
}

std::string bits_string(const semiq_run* run, semiq_party party, semiq_key_stage stage) {
  size_t len = 0;
  check(semiq_run_key(run, party, stage, nullptr, 0, &len));
  std::vector<uint8_t> bits(len);
  check(semiq_run_key(run, party, stage, bits.data(), bits.size(), &len));
  std::string s;
  for (uint8_t b : bits) s += static_cast<char>('0' + b);
  return s.empty() ? "-" : s;
}

int cmd_simulate(const Options& o) {
  semiq_config c = make_config(o);
  Run run;
  check(semiq_simulate(&c, run.out()));
  Text transcript;
  check(semiq_run_transcript(run.get(), transcript.out()));
  write_output(o.out, transcript.get());

  semiq_trial_stats s;
  check(semiq_run_stats(run.get(), &s));
  int consistent = 0;
  check(semiq_transcript_verify(semiq_text_data(transcript.get()), &consistent));

  std::FILE* info = o.out.empty() || o.out == "-" ? stderr : stdout;
  std::fprintf(info, "status=%s\n", s.status == SEMIQ_COMPLETED ? "COMPLETED" : "ABORTED");
  if (s.status == SEMIQ_ABORTED) {
    std::fprintf(info, "abort=%s component %u (%s)\n", s.abort_stage == SEMIQ_ABORT_CASE2 ? "CASE2" : "CASE4",
                 s.abort_component, s.abort_kind == SEMIQ_COMPONENT_CYCLE ? "CYCLE" : "CHAIN");
  }
  std::fprintf(info, "case1_bits=%u case3_bits=%u case4_disclosed_bits=%u cycles=%u chains=%u\n", s.case1_bits,
               s.case3_bits, s.case4_disclosed_bits, s.cycle_components, s.chain_components);
  std::fprintf(info, "raw_alice=%s\nraw_bob=%s\n", bits_string(run.get(), SEMIQ_ALICE, SEMIQ_KEY_RAW).c_str(),
               bits_string(run.get(), SEMIQ_BOB, SEMIQ_KEY_RAW).c_str());
  if (s.status == SEMIQ_COMPLETED) {
    std::fprintf(info, "key_alice=%s\nkey_bob=%s\nkeys_match=%s\n",
                 bits_string(run.get(), SEMIQ_ALICE, SEMIQ_KEY_FINAL).c_str(),
                 bits_string(run.get(), SEMIQ_BOB, SEMIQ_KEY_FINAL).c_str(), s.keys_match ? "true" : "false");
  }
  std::fprintf(info, "public_verification=%s\n", consistent ? "consistent" : "INCONSISTENT");
  return consistent ? 0 : 1;
}

int cmd_campaign(const Options& o) {
  semiq_config c = make_config(o);
  Campaign campaign;
  check(semiq_campaign_run(&c, campaign.out()));
  if (o.out.empty() || o.out == "-") {
    Text csv;
    check(semiq_campaign_csv(campaign.get(), o.timing ? 1 : 0, csv.out()));
    write_output("", csv.get());
  } else {
    check(semiq_campaign_write_csv(campaign.get(), o.out.c_str(), o.timing ? 1 : 0));
  }

  std::FILE* info = o.out.empty() || o.out == "-" ? stderr : stdout;
  Text summary;
  check(semiq_campaign_summary_text(campaign.get(), summary.out()));
  std::fputs(semiq_text_data(summary.get()), info);
  size_t tallies = 0;
  check(semiq_campaign_tally_count(campaign.get(), &tallies));
  for (size_t i = 0; i < tallies; ++i) {
    semiq_component_tally t;
    check(semiq_campaign_tally(campaign.get(), i, &t));
    std::fprintf(info, "pass_rate.%s%u=%.6f (%llu/%llu)\n", t.kind == SEMIQ_COMPONENT_CYCLE ? "cycle" : "chain",
                 t.length, static_cast<double>(t.passed) / static_cast<double>(t.checked),
                 static_cast<unsigned long long>(t.passed), static_cast<unsigned long long>(t.checked));
  }
  return 0;
}

int cmd_verify(const Options& o) {
  Report report;
  check(semiq_verify_backends(o.max_qubits, o.samples, o.seed, report.out()));
  Text text;
  check(semiq_verify_report_text(report.get(), text.out()));
  write_output(o.out, text.get());
  int passed = 0;
  check(semiq_verify_report_passed(report.get(), &passed));
  return passed ? 0 : 1;
}

int cmd_curves(const Options& o) {
  semiq_config c = make_config(o);
  Text csv;
  check(semiq_curves_csv(o.from, o.to, o.empirical ? 1 : 0, &c, csv.out()));
  write_output(o.out, csv.get());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mediated semi-quantum key distribution simulator"};
  app.set_version_flag("--version", std::string(semiq_version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read flat key=value settings; command-line flags take precedence");

  Options o;
  app.add_option("--n", o.n, "Bell pairs per trial (even)")->capture_default_str();
  app.add_option("--trials", o.trials, "Number of trials")->capture_default_str();
  app.add_option("--attack", o.attack, "Third-party behavior")
      ->check(CLI::IsMember({"honest", "naive-measure", "parity-measure", "modify"}))
      ->capture_default_str();
  app.add_option("--gate", o.gate, "Gate used by the modification attack")
      ->check(CLI::IsMember({"x", "y", "z", "h"}))
      ->capture_default_str();
  app.add_option("--m", o.m, "Qubits modified by the modification attack")->capture_default_str();
  app.add_option("--seed", o.seed, "Master seed")->capture_default_str();
  app.add_option("--backend", o.backend, "Simulation backend")
      ->check(CLI::IsMember({"dense", "tableau"}))
      ->capture_default_str();
  app.add_option("--pa-ratio", o.pa_ratio, "Privacy amplification ratio, p/q or decimal")->capture_default_str();
  app.add_option("--out", o.out, "Output file (default: stdout)");
  app.add_option("--threads", o.threads, "Worker threads, 0 for one per core")->capture_default_str();
  app.add_flag("--timing", o.timing, "Fill the elapsed_ms CSV column (output is then not reproducible)");

  auto* simulate = app.add_subcommand("simulate", "Run one trial and print its public transcript");
  auto* campaign = app.add_subcommand("campaign", "Run many trials and write per-trial CSV");
  auto* verify = app.add_subcommand("verify-backends", "Cross-check the tableau backend against exact amplitudes");
  verify->add_option("--max-qubits", o.max_qubits, "Largest circuit to include (<= 24)")->capture_default_str();
  verify->add_option("--samples", o.samples, "Samples per circuit and backend")->capture_default_str();
  auto* curves = app.add_subcommand("curves", "Analytic detection curves, optionally with measured rates");
  curves->add_option("--from", o.from, "First x")->capture_default_str();
  curves->add_option("--to", o.to, "Last x")->capture_default_str();
  curves->add_flag("--empirical", o.empirical, "Also run campaigns with --n, --trials, --seed, --gate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return cmd_simulate(o);
    if (*campaign) return cmd_campaign(o);
    if (*verify) return cmd_verify(o);
    if (*curves) return cmd_curves(o);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error (%s): %s\n", semiq_status_string(e.status), e.message.c_str());
    return 3;
  }
  return 0;
}
