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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcost {

using Line = std::size_t;

/**
 * Gate kinds understood by the IR.
 *
 * CV / CV_DAG are the singly controlled square root of NOT and its inverse,
 * V / V_DAG their uncontrolled forms. FUSED is an arbitrary one- or two-line
 * unitary produced by the optimizer when it merges neighbouring primitives;
 * it keeps the merged gates as its body so that its action stays exact.
 */
enum class GateKind : std::uint8_t {
  NOT,
  CNOT,
  TOFFOLI,
  FREDKIN,
  SWAP,
  PERES,
  V,
  V_DAG,
  CV,
  CV_DAG,
  FUSED,
};

std::string_view kind_name(GateKind kind);

/// Number of control lines a kind carries. FUSED has none.
std::size_t control_arity(GateKind kind);

/// Number of target lines. FUSED reports 2 but may legitimately hold 1.
std::size_t target_arity(GateKind kind);

/// Total lines touched by a gate of this kind.
std::size_t arity(GateKind kind);

/// A quantum primitive touches at most two lines and costs one unit.
bool is_primitive(GateKind kind);

/// Maps basis states to basis states.
bool is_classical(GateKind kind);

class Gate {
 public:
  /// Validates arity and disjointness; throws StructuralError.
  Gate(GateKind kind, std::vector<Line> controls, std::vector<Line> targets);

  static Gate not_gate(Line target);
  static Gate cnot(Line control, Line target);
  static Gate toffoli(Line c1, Line c2, Line target);
  static Gate fredkin(Line control, Line t1, Line t2);
  static Gate swap(Line a, Line b);
  static Gate peres(Line a, Line b, Line target);
  static Gate v(Line target);
  static Gate v_dag(Line target);
  static Gate cv(Line control, Line target);
  static Gate cv_dag(Line control, Line target);

  /// Merges a run of primitives acting on at most two lines into one gate.
  /// Nested FUSED gates are flattened into the new body.
  static Gate fused(std::span<const Gate> body);

  GateKind kind() const { return kind_; }
  const std::vector<Line>& controls() const { return controls_; }
  const std::vector<Line>& targets() const { return targets_; }
  const std::vector<Gate>& body() const { return body_; }

  /// Controls followed by targets.
  std::vector<Line> lines() const;
  bool touches(Line line) const;
  Line max_line() const;

  /// Inverse as a gate sequence. Every kind but PERES inverts to one gate.
  std::vector<Gate> inverse() const;

  /// Same gate with every line index replaced by `mapping[index]`.
  Gate remapped(std::span<const Line> mapping) const;

  std::string to_string() const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate() = default;

  GateKind kind_ = GateKind::NOT;
  std::vector<Line> controls_;
  std::vector<Line> targets_;
  std::vector<Gate> body_;
};

enum class InputRole : std::uint8_t { PrimaryInput, ConstantZero, ConstantOne };
enum class OutputRole : std::uint8_t { PrimaryOutput, Garbage };

struct LineRole {
  InputRole input = InputRole::PrimaryInput;
  OutputRole output = OutputRole::PrimaryOutput;

  friend bool operator==(const LineRole&, const LineRole&) = default;
};

namespace roles {
inline constexpr LineRole pi{InputRole::PrimaryInput, OutputRole::PrimaryOutput};
inline constexpr LineRole const0{InputRole::ConstantZero, OutputRole::PrimaryOutput};
inline constexpr LineRole const1{InputRole::ConstantOne, OutputRole::PrimaryOutput};

constexpr LineRole garbage(LineRole role) {
  return {role.input, OutputRole::Garbage};
}
}  // namespace roles

enum class GateLibrary : std::uint8_t { NCT, NCTSF, NCV, MIXED };

std::string_view library_name(GateLibrary lib);

/// Smallest declared library containing every kind in `gates`.
GateLibrary infer_library(std::span<const Gate> gates);

/**
 * Ordered gate list over a fixed number of lines, with one input role and
 * one output tag per line.
 *
 * Circuits are values: the editing functions below return new circuits and
 * never renumber lines.
 */
class Circuit {
 public:
  Circuit(std::size_t n_lines, std::vector<LineRole> roles,
          std::vector<Gate> gates = {});

  std::size_t n_lines() const { return roles_.size(); }
  const std::vector<LineRole>& roles() const { return roles_; }
  const LineRole& role(Line line) const { return roles_.at(line); }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  GateLibrary library() const { return infer_library(gates_); }

  /// Same lines and roles, different gate list. Gates are validated.
  Circuit with_gates(std::vector<Gate> gates) const;
  Circuit with_roles(std::vector<LineRole> roles) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::vector<LineRole> roles_;
  std::vector<Gate> gates_;
};

/// All-primary-input circuit with no gates.
Circuit identity_circuit(std::size_t n_lines);

Circuit new_circuit(std::size_t n_lines, std::vector<LineRole> roles);

Circuit append_gate(Circuit c, Gate g);

/// Gates in reverse order, each replaced by its inverse.
Circuit inverse(const Circuit& c);

/// Inverse of a bare gate sequence.
std::vector<Gate> inverse_sequence(std::span<const Gate> gates);

/// Renames every line through `mapping` (a permutation of [0, n)); roles
/// move with their lines.
Circuit relabel(const Circuit& c, std::span<const Line> mapping);

struct ResourceCounts {
  std::size_t gate_count = 0;
  std::size_t garbage = 0;
  std::size_t constants = 0;

  friend bool operator==(const ResourceCounts&, const ResourceCounts&) = default;
};

ResourceCounts resource_counts(const Circuit& c);

}  // namespace qcost
