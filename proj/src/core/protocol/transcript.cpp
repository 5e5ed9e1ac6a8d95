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

#include "protocol/transcript.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace semiq::protocol {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join(const std::vector<Position>& values) {
  if (values.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void malformed(std::string_view line, const char* why) {
  throw std::invalid_argument("malformed transcript line '" + std::string(line) + "': " + why);
}

std::uint32_t parse_u32(std::string_view s, std::string_view line) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) malformed(line, "expected an integer");
  return v;
}

std::vector<Position> parse_list(std::string_view s, std::string_view line) {
  std::vector<Position> out;
  if (s == "-") return out;
  for (auto part : split(s, ',')) out.push_back(parse_u32(part, line));
  return out;
}

std::vector<Bit> parse_bits(std::string_view s, std::string_view line) {
  std::vector<Bit> out;
  if (s == "-") return out;
  for (char c : s) {
    if (c != '0' && c != '1') malformed(line, "expected a 0/1 string");
    out.push_back(static_cast<Bit>(c - '0'));
  }
  return out;
}

Party parse_party(std::string_view s, std::string_view line) {
  if (s == "TP") return Party::Tp;
  if (s == "ALICE") return Party::Alice;
  if (s == "BOB") return Party::Bob;
  malformed(line, "unknown party");
}

Role parse_role(std::string_view s, std::string_view line) {
  if (s == "ALICE") return Role::Alice;
  if (s == "BOB") return Role::Bob;
  malformed(line, "unknown role");
}

}  // namespace

std::string_view to_string(Party p) {
  switch (p) {
    case Party::Tp:
      return "TP";
    case Party::Alice:
      return "ALICE";
    case Party::Bob:
      return "BOB";
  }
  return "?";
}

void Transcript::append(Record record) {
  if (std::holds_alternative<MrAnnounce>(record)) {
    if (has_mr_) throw std::logic_error("transcript already holds an MR announcement");
    has_mr_ = true;
  } else if (std::holds_alternative<OrderAnnounce>(record) && !has_mr_) {
    throw std::logic_error("order announced before the MR announcement");
  }
  records_.push_back(std::move(record));
}

const MrAnnounce* Transcript::mr_announce() const {
  for (const auto& r : records_) {
    if (const auto* mr = std::get_if<MrAnnounce>(&r)) return mr;
  }
  return nullptr;
}

std::string Transcript::serialize() const {
  std::ostringstream out;
  for (const auto& record : records_) {
    std::visit(Overloaded{
                   [&](const QuantumSend& r) {
                     out << "QUANTUM_SEND " << to_string(r.from) << ' ' << to_string(r.to) << ' ' << r.qubits;
                   },
                   [&](const MrAnnounce& r) {
                     out << "MR_ANNOUNCE ";
                     if (r.mr.results.empty()) out << '-';
                     for (auto v : r.mr.results) out << static_cast<char>('0' + bell::code2(v));
                   },
                   [&](const OrderAnnounce& r) {
                     out << "ORDER_ANNOUNCE " << to_string(r.role) << ' ' << join(r.order) << ' '
                         << join(r.measured);
                   },
                   [&](const Case4Disclose& r) {
                     out << "CASE4_DISCLOSE " << to_string(r.role) << ' ' << r.position << ' '
                         << static_cast<int>(r.bit);
                   },
                   [&](const AbortRecord& r) {
                     out << "ABORT " << to_string(r.info.stage) << ' ' << r.info.component << ' '
                         << to_string(r.info.kind);
                   },
                   [&](const PaSeed& r) {
                     out << "PA_SEED " << r.ratio.to_string() << ' ' << r.input_len << ' ';
                     if (r.bits.empty()) out << '-';
                     for (auto b : r.bits) out << static_cast<char>('0' + b);
                   },
               },
               record);
    out << '\n';
  }
  return out.str();
}

Transcript Transcript::parse(std::string_view text) {
  Transcript t;
  for (auto line : split(text, '\n')) {
    if (line.empty()) continue;
    const auto f = split(line, ' ');
    const auto& tag = f[0];
    try {
      if (tag == "QUANTUM_SEND" && f.size() == 4) {
        t.append(QuantumSend{parse_party(f[1], line), parse_party(f[2], line), parse_u32(f[3], line)});
      } else if (tag == "MR_ANNOUNCE" && f.size() == 2) {
        MrAnnounce r;
        if (f[1] != "-") {
          for (char c : f[1]) {
            if (c < '0' || c > '3') malformed(line, "expected Bell codes 0-3");
            r.mr.results.push_back(bell::from_code2(static_cast<std::uint8_t>(c - '0')));
          }
        }
        t.append(std::move(r));
      } else if (tag == "ORDER_ANNOUNCE" && f.size() == 4) {
        t.append(OrderAnnounce{parse_role(f[1], line), parse_list(f[2], line), parse_list(f[3], line)});
      } else if (tag == "CASE4_DISCLOSE" && f.size() == 4) {
        const auto bit = parse_u32(f[3], line);
        if (bit > 1) malformed(line, "disclosed bit must be 0 or 1");
        t.append(Case4Disclose{parse_role(f[1], line), parse_u32(f[2], line), static_cast<Bit>(bit)});
      } else if (tag == "ABORT" && f.size() == 4) {
        AbortInfo info;
        if (f[1] == "CASE2") {
          info.stage = AbortStage::Case2;
        } else if (f[1] == "CASE4") {
          info.stage = AbortStage::Case4;
        } else {
          malformed(line, "unknown abort stage");
        }
        info.component = parse_u32(f[2], line);
        if (f[3] == "CYCLE") {
          info.kind = ComponentKind::Cycle;
        } else if (f[3] == "CHAIN") {
          info.kind = ComponentKind::Chain;
        } else {
          malformed(line, "unknown component kind");
        }
        t.append(AbortRecord{info});
      } else if (tag == "PA_SEED" && f.size() == 4) {
        auto ratio = pa::parse_ratio(f[1]);
        if (!ratio) malformed(line, "bad ratio");
        t.append(PaSeed{*ratio, parse_u32(f[2], line), parse_bits(f[3], line)});
      } else {
        malformed(line, "unknown record or wrong field count");
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
      throw std::invalid_argument(std::string("transcript ordering violated: ") + e.what());
    }
  }
  return t;
}

}  // namespace semiq::protocol
