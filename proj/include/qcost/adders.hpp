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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcost/circuit.hpp"

namespace qcost {

/// Where the operands enter a one-bit adder. Half adders have no carry in.
struct AdderPinout {
  Line a = 0;
  Line b = 1;
  std::optional<Line> c_in;
  Line ancilla = 0;

  friend bool operator==(const AdderPinout&, const AdderPinout&) = default;
};

struct AdderBlock {
  Circuit circuit;
  Line sum_line = 0;
  Line carry_line = 0;
  AdderPinout pinout;

  bool is_full() const { return pinout.c_in.has_value(); }
};

/// Throws PreconditionError unless the ancilla is a zero constant and the
/// sum and carry lines are correct for every operand assignment.
void validate_adder(const AdderBlock& block);
bool is_valid_adder(const AdderBlock& block);

/// TOFFOLI(a,b->d) CNOT(a,b) TOFFOLI(b,c->d) CNOT(b,c): sum on c, carry on d.
AdderBlock full_adder_maslov();

/// TOFFOLI(a,b->anc) CNOT(a,b): sum on b, carry on the ancilla.
AdderBlock half_adder();

/**
 * Every 4-line NCT sequence of at most `max_gates` gates that is a full
 * adder for some choice of ancilla, sum and carry lines. One block per
 * distinct permutation, the first found in enumeration order (shorter first,
 * then by gate index). Throws ResourceError above 5 gates.
 */
std::vector<AdderBlock> enumerate_full_adders(std::size_t max_gates = 4);

/// True iff the two blocks compute the same permutation after relabeling.
bool same_block_class(const Circuit& a, const Circuit& b);

/// maslov, pfag (same netlist), a1, a2, a3, half. Throws PreconditionError
/// for other names.
AdderBlock named_adder(std::string_view name);
std::vector<std::string> adder_names();

/**
 * Reads the pinout off a classical 4-line (full) or 3-line (half) circuit:
 * some zero-constant line is the ancilla and the remaining lines, in order,
 * are the operands. Roles of the returned circuit are set to match.
 */
std::optional<AdderBlock> detect_adder(const Circuit& c);

struct UniversalityResult {
  bool universal = false;
  /// Constant assignment and output line(s) that realise the complete set.
  std::string witness;
};

/**
 * Whether fixing some input lines to constants and reading one output line
 * realises NAND or NOR of two free inputs, or AND/OR of two free inputs
 * together with NOT of one. Classical circuits on at most 6 lines.
 */
UniversalityResult universality(const Circuit& c);
bool universality_check(const Circuit& c);
bool universality_check(const AdderBlock& block);

}  // namespace qcost
