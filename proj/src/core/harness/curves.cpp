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

#include "harness/curves.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "adversary/strategy.hpp"
#include "harness/campaign.hpp"

namespace semiq::harness {

double measurement_attack_curve(std::uint32_t t) { return 1.0 - std::pow(21.0 / 32.0, static_cast<double>(t)); }

double modification_attack_curve(std::uint32_t m) { return 1.0 - std::pow(0.5, static_cast<double>(m)); }

std::vector<CurveRow> analytic_curves(std::uint32_t first, std::uint32_t last) {
  if (first > last) {
    throw std::invalid_argument("curve range is empty: " + std::to_string(first) + " > " + std::to_string(last));
  }
  std::vector<CurveRow> rows;
  rows.reserve(last - first + 1);
  for (std::uint64_t x = first; x <= last; ++x) {
    CurveRow r;
    r.x = static_cast<std::uint32_t>(x);
    r.measurement = measurement_attack_curve(r.x);
    r.modification = modification_attack_curve(r.x);
    rows.push_back(r);
  }
  return rows;
}

std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> detection_by_key_bits(
    std::span<const protocol::RunStats> trials) {
  std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> bins;
  for (const auto& t : trials) {
    auto& b = bins[t.case1_bits + t.case3_bits];
    b.first += t.status == protocol::Status::Aborted ? 1 : 0;
    ++b.second;
  }
  return bins;
}

void add_empirical(std::vector<CurveRow>& rows, const EmpiricalCurveConfig& config) {
  CampaignConfig base;
  base.n = config.n;
  base.trials = config.trials;
  base.master_seed = config.master_seed;
  base.backend = config.backend;
  base.threads = config.threads;

  base.strategy = adversary::TpStrategy::naive_measure();
  const auto naive = run_campaign(base);
  const auto bins = detection_by_key_bits(naive.trials);

  for (auto& r : rows) {
    if (auto it = bins.find(r.x); it != bins.end()) {
      r.measurement_trials = it->second.second;
      r.measurement_empirical = static_cast<double>(it->second.first) / static_cast<double>(it->second.second);
    }
    if (r.x >= 1 && r.x <= config.n) {
      base.strategy = adversary::TpStrategy::modification(config.gate, r.x);
      const auto mod = run_campaign(base);
      r.modification_trials = mod.summary.trials;
      r.modification_empirical = mod.summary.detection_rate;
    }
  }
}

std::string format_curves_csv(std::span<const CurveRow> rows) {
  std::ostringstream out;
  out << "x,measurement_curve,measurement_empirical,measurement_trials,modification_curve,"
         "modification_empirical,modification_trials\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  for (const auto& r : rows) {
    out << r.x << ',' << num(r.measurement) << ',';
    if (r.measurement_empirical >= 0.0) out << num(r.measurement_empirical) << ',' << r.measurement_trials;
    else out << ',';
    out << ',' << num(r.modification) << ',';
    if (r.modification_empirical >= 0.0) out << num(r.modification_empirical) << ',' << r.modification_trials;
    else out << ',';
    out << '\n';
  }
  return out.str();
}

}  // namespace semiq::harness
