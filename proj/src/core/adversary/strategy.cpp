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

#include "adversary/strategy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace semiq::adversary {

namespace {

using protocol::MRAnnouncement;
using protocol::Position;
using protocol::QubitId;
using bell::Bit;

class HonestTp final : public protocol::TpBehavior {
 public:
  MRAnnouncement on_return(engine::Register& reg, std::span<const QubitId> q1,
                           std::span<const QubitId> q2) override {
    return protocol::tp_step3_honest(reg, q1, q2);
  }
};

/// Shared by both measurement attacks: Z-measure everything, then forge.
class MeasuringTp final : public protocol::TpBehavior {
 public:
  MeasuringTp(bool parity_aware, StreamRng rng) : parity_aware_(parity_aware), rng_(rng) {}

  MRAnnouncement on_return(engine::Register& reg, std::span<const QubitId> q1,
                           std::span<const QubitId> q2) override {
    if (q1.size() != q2.size()) throw std::invalid_argument("returned sequences differ in length");
    MRAnnouncement mr;
    recorded_.clear();
    for (std::size_t k = 0; k < q1.size(); ++k) {
      const Bit z1 = reg.measure_z(q1[k]);
      const Bit z2 = reg.measure_z(q2[k]);
      recorded_.emplace_back(z1, z2);
      const Bit sign_bit = rng_.bit();
      const Bit parity_bit = parity_aware_ ? static_cast<Bit>(z1 ^ z2) : rng_.bit();
      mr.results.push_back(bell::from_parts(parity_bit, sign_bit));
    }
    return mr;
  }

  std::span<const std::pair<Bit, Bit>> recorded_z() const override { return recorded_; }

 private:
  bool parity_aware_;
  StreamRng rng_;
  std::vector<std::pair<Bit, Bit>> recorded_;
};

class ModifyingTp final : public protocol::TpBehavior {
 public:
  ModifyingTp(engine::Gate gate, std::uint32_t m, std::uint32_t n, StreamRng rng) : gate_(gate) {
    std::vector<Position> all(n);
    std::iota(all.begin(), all.end(), Position{0});
    // Partial Fisher-Yates: the first m entries are a uniform m-subset.
    for (std::uint32_t i = 0; i < m; ++i) {
      std::swap(all[i], all[i + rng.below(n - i)]);
    }
    targets_.assign(all.begin(), all.begin() + m);
    std::sort(targets_.begin(), targets_.end());
  }

  void on_outbound(engine::Register& reg, const protocol::Wires& wires) override {
    attacked_.clear();
    for (Position p : targets_) {
      reg.apply_gate(gate_, wires.a[p]);
      attacked_.push_back(wires.a[p]);
    }
    std::sort(attacked_.begin(), attacked_.end());
  }

  MRAnnouncement on_return(engine::Register& reg, std::span<const QubitId> q1,
                           std::span<const QubitId> q2) override {
    for (QubitId q : q1) {
      if (std::binary_search(attacked_.begin(), attacked_.end(), q)) {
        reg.apply_gate(gate_, q);
      }
    }
    return protocol::tp_step3_honest(reg, q1, q2);
  }

  std::span<const Position> attacked_positions() const override { return targets_; }

 private:
  engine::Gate gate_;
  std::vector<Position> targets_;
  std::vector<QubitId> attacked_;
};

}  // namespace

std::string_view cli_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Honest:
      return "honest";
    case StrategyKind::NaiveMeasure:
      return "naive-measure";
    case StrategyKind::ParityAwareMeasure:
      return "parity-measure";
    case StrategyKind::Modification:
      return "modify";
  }
  return "?";
}

TpStrategy TpStrategy::honest() { return {StrategyKind::Honest, engine::Gate::X, 0}; }
TpStrategy TpStrategy::naive_measure() { return {StrategyKind::NaiveMeasure, engine::Gate::X, 0}; }
TpStrategy TpStrategy::parity_aware_measure() { return {StrategyKind::ParityAwareMeasure, engine::Gate::X, 0}; }
TpStrategy TpStrategy::modification(engine::Gate gate, std::uint32_t m) {
  return {StrategyKind::Modification, gate, m};
}

TpStrategy TpStrategy::from_name(std::string_view name, engine::Gate gate, std::uint32_t m) {
  if (name == "honest") return honest();
  if (name == "naive-measure") return naive_measure();
  if (name == "parity-measure") return parity_aware_measure();
  if (name == "modify") return modification(gate, m);
  throw std::invalid_argument("unknown attack '" + std::string(name) +
                              "' (expected honest, naive-measure, parity-measure or modify)");
}

std::string TpStrategy::descriptor() const {
  std::string out(cli_name(kind_));
  if (kind_ == StrategyKind::Modification) {
    out += ':';
    out += engine::to_string(gate_);
    out += ':';
    out += std::to_string(m_);
  }
  return out;
}

std::unique_ptr<protocol::TpBehavior> TpStrategy::instantiate(std::uint32_t n, StreamRng rng) const {
  switch (kind_) {
    case StrategyKind::Honest:
      return std::make_unique<HonestTp>();
    case StrategyKind::NaiveMeasure:
      return std::make_unique<MeasuringTp>(false, rng);
    case StrategyKind::ParityAwareMeasure:
      return std::make_unique<MeasuringTp>(true, rng);
    case StrategyKind::Modification:
      if (m_ > n) {
        throw std::invalid_argument("modification attack on " + std::to_string(m_) + " qubits exceeds n = " +
                                    std::to_string(n));
      }
      return std::make_unique<ModifyingTp>(gate_, m_, n, rng);
  }
  throw std::logic_error("unhandled strategy kind");
}

}  // namespace semiq::adversary
