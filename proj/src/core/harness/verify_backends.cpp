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

#include "harness/verify_backends.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cstdio>
#include <sstream>

#include "bell_algebra.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace semiq::harness {

namespace {

using bell::BellType;
using engine::Gate;
using engine::MeasurementStep;
using engine::Outcome;
using engine::QubitId;
using engine::Register;

QubitId qb(std::size_t i) { return QubitId{static_cast<std::uint32_t>(i)}; }

/// PhiPlus followed by the Pauli frame that turns it into `state`.
void prepare_bell(Register& r, std::size_t a, std::size_t b, BellType state) {
  r.prepare_bell_phi_plus(qb(a), qb(b));
  if (bell::sign(state)) r.apply_gate(Gate::Z, qb(a));
  if (bell::parity(state)) r.apply_gate(Gate::X, qb(a));
}

std::string label(const std::vector<BellType>& states) {
  std::string out = "[";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ',';
    out += bell::to_string(states[i]);
  }
  return out + "]";
}

std::vector<BellType> random_states(std::size_t k, StreamRng& rng) {
  std::vector<BellType> s(k);
  for (auto& v : s) v = bell::from_code2(static_cast<std::uint8_t>(rng.below(4)));
  return s;
}

// Pairs i = (2i, 2i+1); Bell-measure (2i, 2((i+1) mod k)+1).
ScriptedCircuit cycle_circuit(const std::vector<BellType>& initial) {
  const std::size_t k = initial.size();
  ScriptedCircuit c;
  c.name = "cycle" + std::to_string(k) + label(initial);
  c.qubits = 2 * k;
  c.prepare = [initial](Register& r) {
    for (std::size_t i = 0; i < initial.size(); ++i) prepare_bell(r, 2 * i, 2 * i + 1, initial[i]);
  };
  for (std::size_t i = 0; i < k; ++i) c.plan.push_back(MeasurementStep::bell(qb(2 * i), qb(2 * ((i + 1) % k) + 1)));
  c.relation = [initial](const Outcome& o) {
    std::vector<BellType> results;
    for (auto code : o) results.push_back(bell::from_code2(code));
    return bell::xor_rule_holds(initial, results);
  };
  return c;
}

// Pairs i = (2i, 2i+1). Z-measure qubit 0 and the last qubit; Bell-measure
// (2i+1, 2i+2) along the chain.
ScriptedCircuit chain_circuit(const std::vector<BellType>& initial) {
  const std::size_t pairs = initial.size();
  ScriptedCircuit c;
  c.name = "chain" + std::to_string(pairs) + label(initial);
  c.qubits = 2 * pairs;
  c.prepare = [initial](Register& r) {
    for (std::size_t i = 0; i < initial.size(); ++i) prepare_bell(r, 2 * i, 2 * i + 1, initial[i]);
  };
  c.plan.push_back(MeasurementStep::z(qb(0)));
  c.plan.push_back(MeasurementStep::z(qb(2 * pairs - 1)));
  for (std::size_t i = 0; i + 1 < pairs; ++i) c.plan.push_back(MeasurementStep::bell(qb(2 * i + 1), qb(2 * i + 2)));
  c.relation = [initial](const Outcome& o) {
    bell::ChainSpec spec;
    spec.is1 = initial.front();
    spec.is2 = initial.back();
    spec.intermediates.assign(initial.begin() + 1, initial.end() - 1);
    spec.zmr1 = o[0];
    spec.zmr2 = o[1];
    for (std::size_t i = 2; i < o.size(); ++i) spec.mrs.push_back(bell::from_code2(o[i]));
    return bell::chain_relation_holds(spec);
  };
  return c;
}

// The four-pair layouts used as protocol examples: Alice measures pairs 0 and
// 1, Bob pairs 0 and 2. Wire a of pair i is qubit i, wire b is qubit 4 + i.
ScriptedCircuit protocol_circuit(bool long_chain) {
  ScriptedCircuit c;
  c.name = long_chain ? "protocol4[case1,chain2]" : "protocol4[case1,chain1,cycle1]";
  c.qubits = 8;
  c.prepare = [](Register& r) {
    for (std::size_t i = 0; i < 4; ++i) r.prepare_bell_phi_plus(qb(i), qb(4 + i));
  };
  c.plan = {MeasurementStep::z(qb(0)), MeasurementStep::z(qb(1)), MeasurementStep::z(qb(4)),
            MeasurementStep::z(qb(6))};
  if (long_chain) {
    c.plan.push_back(MeasurementStep::bell(qb(3), qb(5)));
    c.plan.push_back(MeasurementStep::bell(qb(2), qb(7)));
  } else {
    c.plan.push_back(MeasurementStep::bell(qb(2), qb(5)));
    c.plan.push_back(MeasurementStep::bell(qb(3), qb(7)));
  }
  c.relation = [long_chain](const Outcome& o) {
    // o = [zA(0), zA(1), zB(0), zB(2), mr0, mr1]
    if (o[0] != o[2]) return false;
    const auto mr0 = bell::from_code2(o[4]);
    const auto mr1 = bell::from_code2(o[5]);
    if (long_chain) {
      const BellType mrs[] = {mr0, mr1};
      const BellType mid[] = {BellType::PhiPlus};
      return o[3] == bell::infer_remote_bit(o[1], BellType::PhiPlus, BellType::PhiPlus, mid, mrs);
    }
    const BellType init[] = {BellType::PhiPlus};
    const BellType got[] = {mr1};
    return bell::bm_parity(o[1], o[3]) == bell::parity(mr0) && bell::xor_rule_holds(init, got);
  };
  return c;
}

ScriptedCircuit gate_circuit(Gate g, bool bell_plan) {
  ScriptedCircuit c;
  c.name = std::string("phi+ ") + std::string(engine::to_string(g)) + (bell_plan ? " bell" : " zz");
  c.qubits = 2;
  c.prepare = [g](Register& r) {
    r.prepare_bell_phi_plus(qb(0), qb(1));
    r.apply_gate(g, qb(0));
  };
  if (bell_plan) {
    c.plan = {MeasurementStep::bell(qb(0), qb(1))};
    if (g != Gate::H) {
      // A Pauli on one half only relabels the Bell state.
      const BellType expected = g == Gate::X ? BellType::PsiPlus : g == Gate::Z ? BellType::PhiMinus : BellType::PsiMinus;
      c.relation = [expected](const Outcome& o) { return bell::from_code2(o[0]) == expected; };
    }
  } else {
    c.plan = {MeasurementStep::z(qb(0)), MeasurementStep::z(qb(1))};
  }
  return c;
}

}  // namespace

std::vector<ScriptedCircuit> scripted_circuits(std::size_t max_qubits, std::uint64_t seed) {
  StreamRng rng(seed, 0xC1C);
  std::vector<ScriptedCircuit> all;

  {
    ScriptedCircuit empty;
    empty.name = "empty";
    empty.qubits = 1;
    empty.prepare = [](Register&) {};
    empty.plan = {MeasurementStep::z(qb(0))};
    all.push_back(std::move(empty));
  }
  {
    ScriptedCircuit product;
    product.name = "product |01> bell";
    product.qubits = 2;
    product.prepare = [](Register& r) { r.apply_gate(Gate::X, qb(1)); };
    product.plan = {MeasurementStep::bell(qb(0), qb(1))};
    product.relation = [](const Outcome& o) { return bell::parity(bell::from_code2(o[0])) == bell::bm_parity(0, 1); };
    all.push_back(std::move(product));
  }
  for (Gate g : {Gate::X, Gate::Y, Gate::Z, Gate::H}) {
    all.push_back(gate_circuit(g, true));
    all.push_back(gate_circuit(g, false));
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    all.push_back(cycle_circuit(std::vector<BellType>(k, BellType::PhiPlus)));
    all.push_back(cycle_circuit(random_states(k, rng)));
  }
  for (std::size_t pairs = 2; pairs <= 6; ++pairs) {
    all.push_back(chain_circuit(std::vector<BellType>(pairs, BellType::PhiPlus)));
    all.push_back(chain_circuit(random_states(pairs, rng)));
  }
  all.push_back(protocol_circuit(false));
  all.push_back(protocol_circuit(true));

  std::vector<ScriptedCircuit> out;
  for (auto& c : all) {
    if (c.qubits <= max_qubits) out.push_back(std::move(c));
  }
  return out;
}

Outcome sample_circuit(const ScriptedCircuit& c, engine::Backend backend, std::uint64_t seed) {
  Register r(c.qubits, backend, seed);
  c.prepare(r);
  Outcome o;
  o.reserve(c.plan.size());
  for (const auto& step : c.plan) {
    if (step.kind == MeasurementStep::Kind::Z) {
      o.push_back(r.measure_z(step.a));
    } else {
      o.push_back(bell::code2(r.measure_bell(step.a, step.b)));
    }
  }
  return o;
}

GoodnessOfFit chi_square_test(const engine::OutcomeDistribution& exact,
                              const std::map<Outcome, std::uint64_t>& observed, double alpha) {
  GoodnessOfFit fit;
  std::uint64_t total = 0;
  for (const auto& [o, count] : observed) {
    total += count;
    if (exact.find(o) == exact.end()) fit.impossible += count;
  }
  // Small bins are merged, in outcome order, into groups whose expected
  // count reaches 5; a short tail joins the last complete group.
  std::vector<std::pair<double, double>> groups;  // (expected, observed)
  double acc_expected = 0.0;
  double acc_observed = 0.0;
  for (const auto& [o, p] : exact) {
    auto it = observed.find(o);
    acc_expected += p * static_cast<double>(total);
    acc_observed += it == observed.end() ? 0.0 : static_cast<double>(it->second);
    if (acc_expected >= 5.0) {
      groups.emplace_back(acc_expected, acc_observed);
      acc_expected = acc_observed = 0.0;
    }
  }
  if (acc_expected > 0.0) {
    if (groups.empty()) {
      groups.emplace_back(acc_expected, acc_observed);
    } else {
      groups.back().first += acc_expected;
      groups.back().second += acc_observed;
    }
  }
  for (const auto& [expected, seen] : groups) {
    fit.chi_square += (seen - expected) * (seen - expected) / expected;
  }
  const auto bins = static_cast<std::uint32_t>(groups.size());
  fit.dof = bins > 0 ? bins - 1 : 0;
  if (fit.dof > 0) {
    boost::math::chi_squared dist(fit.dof);
    fit.p_value = boost::math::cdf(boost::math::complement(dist, fit.chi_square));
  } else {
    fit.p_value = 1.0;
  }
  fit.pass = fit.impossible == 0 && fit.p_value >= alpha;
  return fit;
}

VerifyReport verify_backends(std::size_t max_qubits, std::uint64_t samples, std::uint64_t seed, double alpha) {
  if (max_qubits > engine::kDenseMaxQubits) {
    throw CapacityError("verify-backends is limited to " + std::to_string(engine::kDenseMaxQubits) + " qubits");
  }
  if (samples == 0) {
    throw std::invalid_argument("verify-backends needs at least one sample");
  }
  VerifyReport report;
  report.alpha = alpha;
  report.pass = true;
  const auto circuits = scripted_circuits(max_qubits, seed);
  for (std::size_t ci = 0; ci < circuits.size(); ++ci) {
    const auto& c = circuits[ci];
    CircuitReport cr;
    cr.name = c.name;
    cr.qubits = c.qubits;
    cr.samples = samples;

    Register reference(c.qubits, engine::Backend::Dense, seed);
    c.prepare(reference);
    const auto exact = reference.outcome_distribution(c.plan);
    cr.support = exact.size();
    cr.relation_checked = static_cast<bool>(c.relation);
    if (c.relation) {
      for (const auto& [o, p] : exact) cr.relation_violations += c.relation(o) ? 0 : 1;
    }

    const std::uint64_t circuit_seed = derive_seed(seed, ci);
    for (auto backend : {engine::Backend::Dense, engine::Backend::Tableau}) {
      std::map<Outcome, std::uint64_t> counts;
      const std::uint64_t stream = derive_seed(circuit_seed, static_cast<std::uint64_t>(backend));
      for (std::uint64_t s = 0; s < samples; ++s) {
        auto o = sample_circuit(c, backend, derive_seed(stream, s));
        if (c.relation && !c.relation(o)) ++cr.relation_violations;
        ++counts[o];
      }
      (backend == engine::Backend::Dense ? cr.dense : cr.tableau) = chi_square_test(exact, counts, alpha);
    }
    cr.pass = cr.dense.pass && cr.tableau.pass && cr.relation_violations == 0;
    report.pass = report.pass && cr.pass;
    report.circuits.push_back(std::move(cr));
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-44s %6s %7s %10s %4s %9s %10s %4s %9s %5s  %s\n", "circuit", "qubits", "support",
                "dense_chi2", "dof", "dense_p", "tabl_chi2", "dof", "tabl_p", "rel", "result");
  out << buf;
  for (const auto& c : report.circuits) {
    std::snprintf(buf, sizeof(buf), "%-44s %6zu %7zu %10.3f %4u %9.4f %10.3f %4u %9.4f %5s  %s\n", c.name.c_str(),
                  c.qubits, c.support, c.dense.chi_square, c.dense.dof, c.dense.p_value, c.tableau.chi_square,
                  c.tableau.dof, c.tableau.p_value,
                  c.relation_checked ? (c.relation_violations == 0 ? "ok" : "FAIL") : "-", c.pass ? "PASS" : "FAIL");
    out << buf;
  }
  out << "alpha=" << report.alpha << " overall=" << (report.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace semiq::harness
