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

#include "harness/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "errors.hpp"
#include "rng.hpp"

namespace semiq::harness {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) { return derive_seed(master_seed, index); }

CampaignResult run_campaign(const CampaignConfig& config) {
  if (config.trials == 0) {
    throw std::invalid_argument("a campaign needs at least one trial");
  }
  protocol::ProtocolConfig base{config.n, 0, config.backend, config.pa_ratio};
  // Validate once up front so configuration errors surface before threads start.
  config.strategy.instantiate(config.n, StreamRng());

  CampaignResult result;
  result.trials.resize(config.trials);

  unsigned workers = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.trials));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= config.trials) return;
      try {
        protocol::ProtocolConfig cfg = base;
        cfg.seed = trial_seed(config.master_seed, i);
        result.trials[i] = protocol::run_protocol(cfg, config.strategy, i).stats;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(config.trials);
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.summary = summarize(result.trials, config.n);
  result.tallies = tally_components(result.trials);
  return result;
}

Summary summarize(std::span<const protocol::RunStats> trials, std::uint32_t n) {
  Summary s;
  s.trials = trials.size();
  double sum = 0.0, sum_sq = 0.0, final_sum = 0.0;
  for (const auto& t : trials) {
    if (t.status == protocol::Status::Aborted) {
      ++s.aborted;
      continue;
    }
    ++s.completed;
    if (!t.keys_match) ++s.mismatched;
    sum += t.raw_key_len;
    sum_sq += static_cast<double>(t.raw_key_len) * t.raw_key_len;
    final_sum += t.final_key_len;
  }
  if (s.trials) s.detection_rate = static_cast<double>(s.aborted) / static_cast<double>(s.trials);
  if (s.completed) {
    const double c = static_cast<double>(s.completed);
    s.mismatch_rate = static_cast<double>(s.mismatched) / c;
    s.mean_raw_key = sum / c;
    s.mean_final_key = final_sum / c;
    if (s.completed > 1) {
      const double var = (sum_sq - c * s.mean_raw_key * s.mean_raw_key) / (c - 1.0);
      s.raw_key_stderr = std::sqrt(std::max(0.0, var) / c);
    }
    s.qubit_efficiency = s.mean_raw_key / (2.0 * n);
    s.qubit_efficiency_stderr = s.raw_key_stderr / (2.0 * n);
  }
  return s;
}

std::vector<ComponentTally> tally_components(std::span<const protocol::RunStats> trials) {
  std::map<std::pair<int, std::uint32_t>, ComponentTally> buckets;
  for (const auto& t : trials) {
    for (const auto& v : t.components) {
      if (!v.checked) continue;
      auto& b = buckets[{static_cast<int>(v.kind), v.length}];
      b.kind = v.kind;
      b.length = v.length;
      ++b.checked;
      b.passed += v.passed ? 1 : 0;
    }
  }
  std::vector<ComponentTally> out;
  out.reserve(buckets.size());
  for (auto& [key, tally] : buckets) out.push_back(tally);
  return out;
}

void write_csv(std::ostream& out, std::span<const protocol::RunStats> trials, bool include_timing) {
  out << "trial_id,n,strategy,status,abort_stage,abort_component_kind,raw_key_len,final_key_len,keys_match,"
         "case1_bits,case3_bits,case4_disclosed_bits,cycle_components,chain_components,qubit_total,elapsed_ms,"
         "cycle_checks_passed,chain_checks,chain_checks_passed,attacked_qubits,attacked_case1,attacked_endpoints,"
         "attacked_case4,tp_known_case3_bits\n";
  for (const auto& t : trials) {
    const bool done = t.status == protocol::Status::Completed;
    out << t.trial_id << ',' << t.n << ',' << t.strategy << ',' << protocol::to_string(t.status) << ',';
    if (t.abort) {
      out << protocol::to_string(t.abort->stage) << ',' << protocol::to_string(t.abort->kind) << ',';
    } else {
      out << ",,";
    }
    if (done) {
      out << t.raw_key_len << ',' << t.final_key_len << ',' << (t.keys_match ? "true" : "false") << ',';
    } else {
      out << ",,,";
    }
    out << t.case1_bits << ',' << t.case3_bits << ',' << t.case4_disclosed_bits << ',' << t.cycle_components << ','
        << t.chain_components << ',' << t.qubit_total << ',';
    if (include_timing) out << fixed(t.elapsed_ms, 3);
    out << ',' << t.cycle_checks_passed << ',' << t.chain_checks << ',' << t.chain_checks_passed << ','
        << t.attacked_qubits << ',' << t.attacked_case1 << ',' << t.attacked_endpoints << ',' << t.attacked_case4
        << ',' << t.tp_known_case3_bits << '\n';
  }
}

void emit_csv(std::span<const protocol::RunStats> trials, const std::string& path, bool include_timing) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  write_csv(file, trials, include_timing);
  file.flush();
  if (!file) {
    throw IoError("failed while writing '" + path + "'");
  }
}

std::string format_summary(const Summary& s) {
  std::ostringstream out;
  out << "trials=" << s.trials << '\n'
      << "completed=" << s.completed << '\n'
      << "aborted=" << s.aborted << '\n'
      << "detection_rate=" << fixed(s.detection_rate, 6) << '\n'
      << "key_mismatches=" << s.mismatched << '\n'
      << "mismatch_rate=" << fixed(s.mismatch_rate, 6) << '\n'
      << "mean_raw_key=" << fixed(s.mean_raw_key, 4) << '\n'
      << "raw_key_stderr=" << fixed(s.raw_key_stderr, 4) << '\n'
      << "mean_final_key=" << fixed(s.mean_final_key, 4) << '\n'
      << "qubit_efficiency=" << fixed(s.qubit_efficiency, 6) << '\n'
      << "qubit_efficiency_stderr=" << fixed(s.qubit_efficiency_stderr, 6) << '\n';
  return out.str();
}

}  // namespace semiq::harness
