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

#include "engine/tableau_state.hpp"

#include <algorithm>
#include <utility>

namespace semiq::engine {

namespace {

constexpr std::uint8_t kX = 1;
constexpr std::uint8_t kZ = 2;

// Exponent of i picked up when multiplying single-qubit Pauli (x1,z1) onto
// (x2,z2), as in the CHP rowsum.
int phase_exponent(std::uint8_t p1, std::uint8_t p2) {
  const int x1 = p1 & kX, z1 = (p1 >> 1) & 1;
  const int x2 = p2 & kX, z2 = (p2 >> 1) & 1;
  if (x1 == 0 && z1 == 0) {
    return 0;
  }
  if (x1 == 1 && z1 == 1) {
    return z2 - x2;
  }
  if (x1 == 1) {
    return z2 * (2 * x2 - 1);
  }
  return x2 * (1 - 2 * z2);
}

}  // namespace

TableauState::TableauState(std::size_t size) : n_(size), rows_(2 * size), touching_(size) {
  for (std::uint32_t q = 0; q < n_; ++q) {
    rows_[q].terms.push_back({q, kX});
    rows_[n_ + q].terms.push_back({q, kZ});
    touching_[q] = {q, static_cast<std::uint32_t>(n_ + q)};
  }
}

std::unique_ptr<StateBackend> TableauState::clone() const { return std::make_unique<TableauState>(*this); }

std::uint8_t TableauState::site(const Row& row, std::uint32_t q) {
  auto it = std::lower_bound(row.terms.begin(), row.terms.end(), q,
                             [](const Term& t, std::uint32_t v) { return t.qubit < v; });
  return (it != row.terms.end() && it->qubit == q) ? it->xz : 0;
}

void TableauState::link(std::uint32_t q, std::uint32_t row) { touching_[q].push_back(row); }

void TableauState::unlink(std::uint32_t q, std::uint32_t row) {
  auto& list = touching_[q];
  auto it = std::find(list.begin(), list.end(), row);
  *it = list.back();
  list.pop_back();
}

void TableauState::set_site(std::uint32_t row, std::uint32_t q, std::uint8_t xz) {
  auto& terms = rows_[row].terms;
  auto it = std::lower_bound(terms.begin(), terms.end(), q,
                             [](const Term& t, std::uint32_t v) { return t.qubit < v; });
  const bool present = it != terms.end() && it->qubit == q;
  if (present) {
    if (xz == 0) {
      terms.erase(it);
      unlink(q, row);
    } else {
      it->xz = xz;
    }
  } else if (xz != 0) {
    terms.insert(it, Term{q, xz});
    link(q, row);
  }
}

void TableauState::replace_row(std::uint32_t row, Row value) {
  for (const Term& t : rows_[row].terms) {
    unlink(t.qubit, row);
  }
  rows_[row] = std::move(value);
  for (const Term& t : rows_[row].terms) {
    link(t.qubit, row);
  }
}

void TableauState::multiply_into(Row& target, const Row& source) {
  int exponent = 2 * target.sign + 2 * source.sign;
  std::vector<Term> merged;
  merged.reserve(target.terms.size() + source.terms.size());
  auto a = target.terms.begin();
  auto b = source.terms.begin();
  while (a != target.terms.end() || b != source.terms.end()) {
    if (b == source.terms.end() || (a != target.terms.end() && a->qubit < b->qubit)) {
      merged.push_back(*a++);
    } else if (a == target.terms.end() || b->qubit < a->qubit) {
      merged.push_back(*b++);
    } else {
      exponent += phase_exponent(b->xz, a->xz);
      const std::uint8_t xz = a->xz ^ b->xz;
      if (xz != 0) {
        merged.push_back({a->qubit, xz});
      }
      ++a;
      ++b;
    }
  }
  target.terms = std::move(merged);
  target.sign = (((exponent % 4) + 4) % 4) == 2 ? 1 : 0;
}

void TableauState::apply_gate(Gate g, std::uint32_t q) {
  for (std::uint32_t r : touching_[q]) {
    auto& terms = rows_[r].terms;
    auto it = std::lower_bound(terms.begin(), terms.end(), q,
                               [](const Term& t, std::uint32_t v) { return t.qubit < v; });
    const std::uint8_t x = it->xz & kX;
    const std::uint8_t z = (it->xz >> 1) & 1;
    auto& sign = rows_[r].sign;
    switch (g) {
      case Gate::X:
        sign ^= z;
        break;
      case Gate::Y:
        sign ^= x ^ z;
        break;
      case Gate::Z:
        sign ^= x;
        break;
      case Gate::H:
        sign ^= x & z;
        it->xz = static_cast<std::uint8_t>((x << 1) | z);
        break;
    }
  }
}

void TableauState::apply_cnot(std::uint32_t control, std::uint32_t target) {
  std::vector<std::uint32_t> rows(touching_[control]);
  rows.insert(rows.end(), touching_[target].begin(), touching_[target].end());
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (std::uint32_t r : rows) {
    const std::uint8_t pc = site(rows_[r], control);
    const std::uint8_t pt = site(rows_[r], target);
    const std::uint8_t xc = pc & kX, zc = (pc >> 1) & 1;
    const std::uint8_t xt = pt & kX, zt = (pt >> 1) & 1;
    rows_[r].sign ^= xc & zt & (xt ^ zc ^ 1);
    const std::uint8_t new_zc = zc ^ zt;
    const std::uint8_t new_xt = xt ^ xc;
    set_site(r, control, static_cast<std::uint8_t>(xc | (new_zc << 1)));
    set_site(r, target, static_cast<std::uint8_t>(new_xt | (zt << 1)));
  }
}

Bit TableauState::measure_z(std::uint32_t q, StreamRng& rng) {
  const auto n = static_cast<std::uint32_t>(n_);
  // Fixed stream consumption per measurement, random or not.
  const Bit coin = rng.bit();

  std::vector<std::uint32_t> with_x;
  for (std::uint32_t r : touching_[q]) {
    if (site(rows_[r], q) & kX) {
      with_x.push_back(r);
    }
  }
  std::sort(with_x.begin(), with_x.end());

  auto pivot = std::find_if(with_x.begin(), with_x.end(), [n](std::uint32_t r) { return r >= n; });
  if (pivot != with_x.end()) {
    const std::uint32_t p = *pivot;
    for (std::uint32_t r : with_x) {
      if (r == p || r == p - n) {
        continue;
      }
      Row updated = rows_[r];
      multiply_into(updated, rows_[p]);
      replace_row(r, std::move(updated));
    }
    replace_row(p - n, rows_[p]);
    Row fresh;
    fresh.terms.push_back({q, kZ});
    fresh.sign = coin;
    replace_row(p, std::move(fresh));
    return coin;
  }

  Row scratch;
  for (std::uint32_t r : with_x) {
    multiply_into(scratch, rows_[r + n]);
  }
  return scratch.sign;
}

std::size_t TableauState::total_weight() const {
  std::size_t w = 0;
  for (const auto& row : rows_) {
    w += row.terms.size();
  }
  return w;
}

}  // namespace semiq::engine
