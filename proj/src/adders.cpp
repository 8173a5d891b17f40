// Copyright 2026 The qcost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcost/adders.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "qcost/errors.hpp"

namespace qcost {
namespace {

using Mask = std::uint64_t;

// Truth tables as bit masks over all 2^n basis states, line 0 being the most
// significant bit of the state index.
std::vector<Mask> input_masks(std::size_t n) {
  std::vector<Mask> masks(n, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    for (Line l = 0; l < n; ++l) {
      if ((s >> (n - 1 - l)) & 1u) masks[l] |= Mask{1} << s;
    }
  }
  return masks;
}

Mask all_states(std::size_t n) {
  return n == 6 ? ~Mask{0} : (Mask{1} << (std::uint64_t{1} << n)) - 1;
}

void apply_mask(const Gate& g, std::vector<Mask>& m, Mask full) {
  const auto& c = g.controls();
  const auto& t = g.targets();
  switch (g.kind()) {
    case GateKind::NOT: m[t[0]] ^= full; break;
    case GateKind::CNOT: m[t[0]] ^= m[c[0]]; break;
    case GateKind::TOFFOLI: m[t[0]] ^= m[c[0]] & m[c[1]]; break;
    case GateKind::SWAP: std::swap(m[t[0]], m[t[1]]); break;
    case GateKind::FREDKIN: {
      const Mask d = (m[t[0]] ^ m[t[1]]) & m[c[0]];
      m[t[0]] ^= d;
      m[t[1]] ^= d;
      break;
    }
    case GateKind::PERES:
      m[t[0]] ^= m[c[0]] & m[c[1]];
      m[c[1]] ^= m[c[0]];
      break;
    default:
      throw PreconditionError("non-classical gate " + g.to_string());
  }
}

std::vector<Mask> output_masks(const Circuit& c) {
  if (c.n_lines() > 6) throw PreconditionError("truth-table analysis limited to 6 lines");
  std::vector<Mask> m = input_masks(c.n_lines());
  const Mask full = all_states(c.n_lines());
  for (const Gate& g : c.gates()) apply_mask(g, m, full);
  return m;
}

struct AdderLines {
  Line sum = 0;
  Line carry = 0;
};

// Sum and carry lines given the ancilla and operand lines, if any.
std::optional<AdderLines> find_outputs(const std::vector<Mask>& in, const std::vector<Mask>& out,
                                       Line ancilla, const std::vector<Line>& operands) {
  const Mask care = ~in[ancilla] & all_states(in.size());
  Mask sum = 0, carry = 0;
  if (operands.size() == 3) {
    const Mask a = in[operands[0]], b = in[operands[1]], c = in[operands[2]];
    sum = (a ^ b ^ c) & care;
    carry = ((a & b) | (a & c) | (b & c)) & care;
  } else {
    const Mask a = in[operands[0]], b = in[operands[1]];
    sum = (a ^ b) & care;
    carry = a & b & care;
  }
  for (Line s = 0; s < out.size(); ++s) {
    if ((out[s] & care) != sum) continue;
    for (Line k = 0; k < out.size(); ++k) {
      if (k != s && (out[k] & care) == carry) return AdderLines{s, k};
    }
  }
  return std::nullopt;
}

std::vector<Line> other_lines(std::size_t n, Line ancilla) {
  std::vector<Line> out;
  for (Line l = 0; l < n; ++l) {
    if (l != ancilla) out.push_back(l);
  }
  return out;
}

std::vector<LineRole> block_roles(std::size_t n, Line ancilla, AdderLines lines) {
  std::vector<LineRole> roles(n, roles::garbage(roles::pi));
  roles[ancilla] = roles::garbage(roles::const0);
  roles[lines.sum].output = OutputRole::PrimaryOutput;
  roles[lines.carry].output = OutputRole::PrimaryOutput;
  return roles;
}

AdderBlock make_block(const Circuit& c, Line ancilla, AdderLines lines) {
  const std::vector<Line> ops = other_lines(c.n_lines(), ancilla);
  AdderPinout pin;
  pin.a = ops[0];
  pin.b = ops[1];
  if (ops.size() == 3) pin.c_in = ops[2];
  pin.ancilla = ancilla;
  return AdderBlock{c.with_roles(block_roles(c.n_lines(), ancilla, lines)), lines.sum,
                    lines.carry, pin};
}

std::vector<Gate> nct_alphabet(std::size_t n) {
  std::vector<Gate> gates;
  for (Line t = 0; t < n; ++t) gates.push_back(Gate::not_gate(t));
  for (Line c = 0; c < n; ++c) {
    for (Line t = 0; t < n; ++t) {
      if (c != t) gates.push_back(Gate::cnot(c, t));
    }
  }
  for (Line c1 = 0; c1 < n; ++c1) {
    for (Line c2 = c1 + 1; c2 < n; ++c2) {
      for (Line t = 0; t < n; ++t) {
        if (t != c1 && t != c2) gates.push_back(Gate::toffoli(c1, c2, t));
      }
    }
  }
  return gates;
}

std::vector<Mask> class_key(const Circuit& c) {
  std::vector<Line> perm(c.n_lines());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  do {
    std::vector<Mask> key = output_masks(relabel(c, perm));
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

void validate_adder(const AdderBlock& block) {
  const Circuit& c = block.circuit;
  const std::size_t expected = block.is_full() ? 4 : 3;
  if (c.n_lines() != expected) {
    throw PreconditionError("adder block must have " + std::to_string(expected) + " lines");
  }
  const AdderPinout& p = block.pinout;
  std::vector<Line> ops{p.a, p.b};
  if (p.c_in) ops.push_back(*p.c_in);
  std::vector<Line> all = ops;
  all.push_back(p.ancilla);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end() || all.back() >= c.n_lines()) {
    throw PreconditionError("adder pinout is not a set of distinct lines");
  }
  if (c.role(p.ancilla).input != InputRole::ConstantZero) {
    throw PreconditionError("adder ancilla is not a zero constant");
  }
  const std::vector<Mask> in = input_masks(c.n_lines());
  const std::vector<Mask> out = output_masks(c);
  const Mask care = ~in[p.ancilla] & all_states(c.n_lines());
  Mask sum = 0, carry = 0;
  if (block.is_full()) {
    const Mask a = in[ops[0]], b = in[ops[1]], ci = in[ops[2]];
    sum = a ^ b ^ ci;
    carry = (a & b) | (a & ci) | (b & ci);
  } else {
    sum = in[ops[0]] ^ in[ops[1]];
    carry = in[ops[0]] & in[ops[1]];
  }
  if ((out.at(block.sum_line) & care) != (sum & care)) {
    throw PreconditionError("adder sum line is wrong");
  }
  if ((out.at(block.carry_line) & care) != (carry & care)) {
    throw PreconditionError("adder carry line is wrong");
  }
}

bool is_valid_adder(const AdderBlock& block) {
  try {
    validate_adder(block);
    return true;
  } catch (const Error&) {
    return false;
  }
}

AdderBlock full_adder_maslov() {
  const Line a = 0, b = 1, c = 2, d = 3;
  Circuit circ(4, block_roles(4, d, {c, d}),
               {Gate::toffoli(a, b, d), Gate::cnot(a, b), Gate::toffoli(b, c, d),
                Gate::cnot(b, c)});
  return AdderBlock{std::move(circ), c, d, AdderPinout{a, b, c, d}};
}

AdderBlock half_adder() {
  const Line a = 0, b = 1, anc = 2;
  Circuit circ(3, block_roles(3, anc, {b, anc}), {Gate::toffoli(a, b, anc), Gate::cnot(a, b)});
  return AdderBlock{std::move(circ), b, anc, AdderPinout{a, b, std::nullopt, anc}};
}

std::vector<AdderBlock> enumerate_full_adders(std::size_t max_gates) {
  if (max_gates > 5) throw ResourceError("full adder enumeration is limited to 5 gates");
  constexpr std::size_t n = 4;
  const std::vector<Gate> alphabet = nct_alphabet(n);
  const std::vector<Mask> in = input_masks(n);
  const Mask full = all_states(n);

  std::vector<AdderBlock> out;
  std::vector<std::vector<Mask>> seen;
  std::vector<std::size_t> seq;
  std::vector<std::vector<Mask>> stack{in};

  // Depth-first in lexicographic order, one length at a time.
  for (std::size_t len = 1; len <= max_gates; ++len) {
    seq.assign(len, 0);
    std::size_t depth = 0;
    stack.resize(1);
    for (;;) {
      if (depth < len) {
        std::vector<Mask> next = stack.back();
        apply_mask(alphabet[seq[depth]], next, full);
        stack.push_back(std::move(next));
        ++depth;
        continue;
      }
      const std::vector<Mask>& masks = stack.back();
      for (Line anc = 0; anc < n; ++anc) {
        const auto lines = find_outputs(in, masks, anc, other_lines(n, anc));
        if (!lines) continue;
        std::vector<Gate> gates;
        for (std::size_t i : seq) gates.push_back(alphabet[i]);
        Circuit c(n, std::vector<LineRole>(n, roles::pi), std::move(gates));
        if (std::find(seen.begin(), seen.end(), masks) == seen.end()) {
          seen.push_back(masks);
          out.push_back(make_block(c, anc, *lines));
        }
        break;
      }
      // Advance to the next sequence of this length.
      while (depth > 0 && seq[depth - 1] + 1 == alphabet.size()) {
        seq[depth - 1] = 0;
        stack.pop_back();
        --depth;
      }
      if (depth == 0) break;
      ++seq[depth - 1];
      stack.pop_back();
      --depth;
    }
  }
  return out;
}

bool same_block_class(const Circuit& a, const Circuit& b) {
  return a.n_lines() == b.n_lines() && class_key(a) == class_key(b);
}

AdderBlock named_adder(std::string_view name) {
  if (name == "maslov" || name == "pfag") return full_adder_maslov();
  if (name == "half") return half_adder();
  if (name == "a1" || name == "a2" || name == "a3") {
    static const std::vector<AdderBlock> alternates = [] {
      // Blocks outside the Maslov relabeling class, in enumeration order.
      const Circuit maslov = full_adder_maslov().circuit;
      std::vector<AdderBlock> found;
      for (AdderBlock& b : enumerate_full_adders(4)) {
        if (found.size() < 3 && !same_block_class(b.circuit, maslov)) {
          found.push_back(std::move(b));
        }
      }
      if (found.size() < 3) throw std::logic_error("fewer than three alternate full adders");
      return found;
    }();
    return alternates[static_cast<std::size_t>(name[1] - '1')];
  }
  throw PreconditionError("unknown adder block '" + std::string(name) + "'");
}

std::vector<std::string> adder_names() { return {"maslov", "pfag", "a1", "a2", "a3", "half"}; }

std::optional<AdderBlock> detect_adder(const Circuit& c) {
  const std::size_t n = c.n_lines();
  if (n != 3 && n != 4) return std::nullopt;
  for (const Gate& g : c.gates()) {
    if (!is_classical(g.kind())) return std::nullopt;
  }
  const std::vector<Mask> in = input_masks(n);
  const std::vector<Mask> out = output_masks(c);
  for (Line anc = 0; anc < n; ++anc) {
    if (c.role(anc).input != InputRole::ConstantZero) continue;
    if (const auto lines = find_outputs(in, out, anc, other_lines(n, anc))) {
      AdderBlock block = make_block(c, anc, *lines);
      std::vector<LineRole> roles = block.circuit.roles();
      for (Line l = 0; l < n; ++l) roles[l].input = c.role(l).input;
      block.circuit = block.circuit.with_roles(std::move(roles));
      return block;
    }
  }
  return std::nullopt;
}

UniversalityResult universality(const Circuit& c) {
  const std::size_t n = c.n_lines();
  for (const Gate& g : c.gates()) {
    if (!is_classical(g.kind())) {
      throw PreconditionError("universality needs a classical circuit, found " + g.to_string());
    }
  }
  const std::vector<Mask> out = output_masks(c);

  // Truth tables indexed by the free inputs in line order, first free line
  // as the high bit: NAND 1110, NOR 1000, AND 0001, OR 0111, NOT 10.
  struct Named {
    unsigned table;
    const char* name;
  };
  constexpr std::array<Named, 2> complete = {{{0b1110, "NAND"}, {0b1000, "NOR"}}};
  constexpr std::array<Named, 2> monotone = {{{0b0001, "AND"}, {0b0111, "OR"}}};

  std::string and_or, negation;
  std::vector<int> assign(n, 0);  // 0 = free, 1 = constant 0, 2 = constant 1
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    std::vector<Line> free;
    std::uint64_t fixed = 0;
    for (Line l = 0; l < n; ++l) {
      assign[l] = static_cast<int>(rest % 3);
      rest /= 3;
      if (assign[l] == 0) free.push_back(l);
      if (assign[l] == 2) fixed |= std::uint64_t{1} << (n - 1 - l);
    }
    if (free.empty() || free.size() > 2) continue;
    auto describe = [&](Line o, const char* fn) {
      std::string w;
      for (Line l = 0; l < n; ++l) {
        if (!w.empty()) w += ' ';
        w += 'l' + std::to_string(l) + '=';
        if (assign[l] == 0) {
          w += l == free[0] ? 'x' : 'y';
        } else {
          w += assign[l] == 1 ? '0' : '1';
        }
      }
      return w + " -> l" + std::to_string(o) + " = " + fn +
             (free.size() == 2 ? "(x,y)" : "(x)");
    };
    for (Line o = 0; o < n; ++o) {
      unsigned table = 0;
      const std::size_t rows = std::size_t{1} << free.size();
      for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t s = fixed;
        for (std::size_t k = 0; k < free.size(); ++k) {
          if ((r >> (free.size() - 1 - k)) & 1u) s |= std::uint64_t{1} << (n - 1 - free[k]);
        }
        if ((out[o] >> s) & 1u) table |= 1u << (rows - 1 - r);
      }
      if (free.size() == 1) {
        if (table == 0b10 && negation.empty()) negation = describe(o, "NOT");
        continue;
      }
      for (const Named& f : complete) {
        if (table == f.table) return {true, describe(o, f.name)};
      }
      for (const Named& f : monotone) {
        if (table == f.table && and_or.empty()) and_or = describe(o, f.name);
      }
    }
  }
  if (!and_or.empty() && !negation.empty()) return {true, and_or + "; " + negation};
  return {false, {}};
}

bool universality_check(const Circuit& c) { return universality(c).universal; }

bool universality_check(const AdderBlock& block) { return universality_check(block.circuit); }

}  // namespace qcost
