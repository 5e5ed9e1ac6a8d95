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

// Brute-force reference used by the tests. Amplitudes are enumerated
// directly and Bell outcomes are obtained by projecting onto the four Bell
// vectors written out from their definitions, so nothing here shares code
// with the engine or with the Bell-label algebra.

#pragma once

#include <cmath>
#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

// Two-qubit Bell vectors over |q_a q_b> in the order 00, 01, 10, 11, indexed
// by the label code 0..3 (PHI+, PHI-, PSI+, PSI-).
inline std::array<std::array<cd, 4>, 4> bell_vectors() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{
      {h, 0, 0, h},    // (|00> + |11>)/sqrt2
      {h, 0, 0, -h},   // (|00> - |11>)/sqrt2
      {0, h, h, 0},    // (|01> + |10>)/sqrt2
      {0, h, -h, 0},   // (|01> - |10>)/sqrt2
  }};
}

struct Step {
  bool bell = false;
  unsigned a = 0;
  unsigned b = 0;
};

inline Step z(unsigned q) { return {false, q, q}; }
inline Step bell(unsigned a, unsigned b) { return {true, a, b}; }

class State {
 public:
  explicit State(unsigned qubits) : n_(qubits), amp_(std::size_t{1} << qubits) { amp_[0] = 1.0; }

  unsigned qubits() const { return n_; }
  const std::vector<cd>& amplitudes() const { return amp_; }

  // Overwrites qubits (a, b), currently |00>, with Bell state `code`.
  void set_bell(unsigned a, unsigned b, unsigned code) {
    const auto vecs = bell_vectors();
    std::vector<cd> out(amp_.size());
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (amp_[i] == cd{}) continue;
      if (((i >> a) & 1U) || ((i >> b) & 1U)) throw std::logic_error("pair not in |00>");
      for (unsigned ab = 0; ab < 4; ++ab) {
        const std::size_t j = i | (std::size_t{(ab >> 1) & 1U} << a) | (std::size_t{ab & 1U} << b);
        out[j] += amp_[i] * vecs[code][ab];
      }
    }
    amp_ = std::move(out);
  }

  // 2x2 unitary on qubit q, row-major.
  void apply(unsigned q, cd u00, cd u01, cd u10, cd u11) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (i & bit) continue;
      const cd x0 = amp_[i];
      const cd x1 = amp_[i | bit];
      amp_[i] = u00 * x0 + u01 * x1;
      amp_[i | bit] = u10 * x0 + u11 * x1;
    }
  }
  void x(unsigned q) { apply(q, 0, 1, 1, 0); }
  void y(unsigned q) { apply(q, 0, 1, -1, 0); }  // i*sigma_y
  void zgate(unsigned q) { apply(q, 1, 0, 0, -1); }
  void h(unsigned q) {
    const double s = 1.0 / std::sqrt(2.0);
    apply(q, s, s, s, -s);
  }
  void cnot(unsigned c, unsigned t) {
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (((i >> c) & 1U) && !((i >> t) & 1U)) std::swap(amp_[i], amp_[i | (std::size_t{1} << t)]);
    }
  }

  // Unnormalized projection; returns the squared norm of the result.
  double project_z(unsigned q, unsigned value) {
    double p = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (((i >> q) & 1U) != value) {
        amp_[i] = 0.0;
      } else {
        p += std::norm(amp_[i]);
      }
    }
    return p;
  }

  double project_bell(unsigned a, unsigned b, unsigned code) {
    const auto v = bell_vectors()[code];
    const std::size_t ma = std::size_t{1} << a;
    const std::size_t mb = std::size_t{1} << b;
    std::vector<cd> out(amp_.size());
    double p = 0.0;
    for (std::size_t base = 0; base < amp_.size(); ++base) {
      if ((base & ma) || (base & mb)) continue;
      const std::size_t idx[4] = {base, base | mb, base | ma, base | ma | mb};
      cd overlap = 0.0;
      for (unsigned k = 0; k < 4; ++k) overlap += std::conj(v[k]) * amp_[idx[k]];
      for (unsigned k = 0; k < 4; ++k) out[idx[k]] = v[k] * overlap;
      p += std::norm(overlap);
    }
    amp_ = std::move(out);
    return p;
  }

  void scale(double f) {
    for (auto& x : amp_) x *= f;
  }

 private:
  unsigned n_;
  std::vector<cd> amp_;
};

using Outcome = std::vector<std::uint8_t>;
using Distribution = std::map<Outcome, double>;

namespace detail {
inline void branch(const State& s, const std::vector<Step>& plan, std::size_t k, double prob, Outcome& prefix,
                   Distribution& out) {
  if (prob < 1e-12) return;
  if (k == plan.size()) {
    out[prefix] += prob;
    return;
  }
  const Step& st = plan[k];
  const unsigned outcomes = st.bell ? 4 : 2;
  for (unsigned o = 0; o < outcomes; ++o) {
    State next = s;
    const double p = st.bell ? next.project_bell(st.a, st.b, o) : next.project_z(st.a, o);
    if (p < 1e-12) continue;
    next.scale(1.0 / std::sqrt(p));
    prefix.push_back(static_cast<std::uint8_t>(o));
    branch(next, plan, k + 1, prob * p, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

// Exact joint distribution of the plan. Z steps yield 0/1, Bell steps the
// label code 0..3.
inline Distribution distribution(const State& s, const std::vector<Step>& plan) {
  Distribution out;
  Outcome prefix;
  detail::branch(s, plan, 0, 1.0, prefix, out);
  return out;
}

}  // namespace oracle
