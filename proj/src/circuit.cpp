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

#include "qcost/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "qcost/errors.hpp"

namespace qcost {

std::string_view kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::NOT: return "NOT";
    case GateKind::CNOT: return "CNOT";
    case GateKind::TOFFOLI: return "TOFFOLI";
    case GateKind::FREDKIN: return "FREDKIN";
    case GateKind::SWAP: return "SWAP";
    case GateKind::PERES: return "PERES";
    case GateKind::V: return "V";
    case GateKind::V_DAG: return "V_DAG";
    case GateKind::CV: return "CV";
    case GateKind::CV_DAG: return "CV_DAG";
    case GateKind::FUSED: return "FUSED";
  }
  return "?";
}

std::size_t control_arity(GateKind kind) {
  switch (kind) {
    case GateKind::NOT:
    case GateKind::SWAP:
    case GateKind::V:
    case GateKind::V_DAG:
    case GateKind::FUSED:
      return 0;
    case GateKind::CNOT:
    case GateKind::FREDKIN:
    case GateKind::CV:
    case GateKind::CV_DAG:
      return 1;
    case GateKind::TOFFOLI:
    case GateKind::PERES:
      return 2;
  }
  return 0;
}

std::size_t target_arity(GateKind kind) {
  switch (kind) {
    case GateKind::SWAP:
    case GateKind::FREDKIN:
    case GateKind::FUSED:
      return 2;
    default:
      return 1;
  }
}

std::size_t arity(GateKind kind) {
  return control_arity(kind) + target_arity(kind);
}

bool is_primitive(GateKind kind) { return arity(kind) <= 2; }

bool is_classical(GateKind kind) {
  switch (kind) {
    case GateKind::V:
    case GateKind::V_DAG:
    case GateKind::CV:
    case GateKind::CV_DAG:
    case GateKind::FUSED:
      return false;
    default:
      return true;
  }
}

namespace {

void check_distinct(const std::vector<Line>& controls,
                    const std::vector<Line>& targets) {
  std::vector<Line> all = controls;
  all.insert(all.end(), targets.begin(), targets.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw StructuralError("gate lines overlap");
  }
}

}  // namespace

Gate::Gate(GateKind kind, std::vector<Line> controls, std::vector<Line> targets)
    : kind_(kind), controls_(std::move(controls)), targets_(std::move(targets)) {
  if (kind_ == GateKind::FUSED) {
    throw StructuralError("FUSED gates are built with Gate::fused");
  }
  if (controls_.size() != control_arity(kind_) ||
      targets_.size() != target_arity(kind_)) {
    throw StructuralError(std::string(kind_name(kind_)) +
                          " has the wrong number of lines");
  }
  check_distinct(controls_, targets_);
}

Gate Gate::not_gate(Line target) { return {GateKind::NOT, {}, {target}}; }
Gate Gate::cnot(Line control, Line target) {
  return {GateKind::CNOT, {control}, {target}};
}
Gate Gate::toffoli(Line c1, Line c2, Line target) {
  return {GateKind::TOFFOLI, {c1, c2}, {target}};
}
Gate Gate::fredkin(Line control, Line t1, Line t2) {
  return {GateKind::FREDKIN, {control}, {t1, t2}};
}
Gate Gate::swap(Line a, Line b) { return {GateKind::SWAP, {}, {a, b}}; }
Gate Gate::peres(Line a, Line b, Line target) {
  return {GateKind::PERES, {a, b}, {target}};
}
Gate Gate::v(Line target) { return {GateKind::V, {}, {target}}; }
Gate Gate::v_dag(Line target) { return {GateKind::V_DAG, {}, {target}}; }
Gate Gate::cv(Line control, Line target) {
  return {GateKind::CV, {control}, {target}};
}
Gate Gate::cv_dag(Line control, Line target) {
  return {GateKind::CV_DAG, {control}, {target}};
}

Gate Gate::fused(std::span<const Gate> body) {
  Gate g;
  g.kind_ = GateKind::FUSED;
  for (const Gate& part : body) {
    if (part.kind() == GateKind::FUSED) {
      g.body_.insert(g.body_.end(), part.body().begin(), part.body().end());
    } else if (is_primitive(part.kind())) {
      g.body_.push_back(part);
    } else {
      throw StructuralError("FUSED body must hold primitives only");
    }
  }
  if (g.body_.empty()) throw StructuralError("FUSED body is empty");
  for (const Gate& part : g.body_) {
    for (Line l : part.lines()) {
      if (std::find(g.targets_.begin(), g.targets_.end(), l) == g.targets_.end()) {
        g.targets_.push_back(l);
      }
    }
  }
  if (g.targets_.size() > 2) {
    throw StructuralError("FUSED body touches more than two lines");
  }
  std::sort(g.targets_.begin(), g.targets_.end());
  return g;
}

std::vector<Line> Gate::lines() const {
  std::vector<Line> out = controls_;
  out.insert(out.end(), targets_.begin(), targets_.end());
  return out;
}

bool Gate::touches(Line line) const {
  return std::find(controls_.begin(), controls_.end(), line) != controls_.end() ||
         std::find(targets_.begin(), targets_.end(), line) != targets_.end();
}

Line Gate::max_line() const {
  Line m = 0;
  for (Line l : controls_) m = std::max(m, l);
  for (Line l : targets_) m = std::max(m, l);
  return m;
}

std::vector<Gate> Gate::inverse() const {
  switch (kind_) {
    case GateKind::V: return {v_dag(targets_[0])};
    case GateKind::V_DAG: return {v(targets_[0])};
    case GateKind::CV: return {cv_dag(controls_[0], targets_[0])};
    case GateKind::CV_DAG: return {cv(controls_[0], targets_[0])};
    case GateKind::PERES:
      // Toffoli then CNOT(a, b), undone in reverse.
      return {cnot(controls_[0], controls_[1]),
              toffoli(controls_[0], controls_[1], targets_[0])};
    case GateKind::FUSED: {
      std::vector<Gate> inv = inverse_sequence(body_);
      return {fused(inv)};
    }
    default:
      return {*this};
  }
}

Gate Gate::remapped(std::span<const Line> mapping) const {
  Gate g = *this;
  for (Line& l : g.controls_) l = mapping[l];
  for (Line& l : g.targets_) l = mapping[l];
  for (Gate& part : g.body_) part = part.remapped(mapping);
  if (kind_ == GateKind::FUSED) std::sort(g.targets_.begin(), g.targets_.end());
  return g;
}

std::string Gate::to_string() const {
  std::ostringstream os;
  os << kind_name(kind_) << '(';
  bool first = true;
  for (Line l : controls_) {
    os << (first ? "" : ",") << l;
    first = false;
  }
  if (!controls_.empty()) os << "->";
  first = true;
  for (Line l : targets_) {
    os << (first ? "" : ",") << l;
    first = false;
  }
  if (kind_ == GateKind::FUSED) {
    os << " {";
    for (std::size_t i = 0; i < body_.size(); ++i) {
      os << (i ? " " : "") << body_[i].to_string();
    }
    os << '}';
  }
  os << ')';
  return os.str();
}

std::string_view library_name(GateLibrary lib) {
  switch (lib) {
    case GateLibrary::NCT: return "NCT";
    case GateLibrary::NCTSF: return "NCTSF";
    case GateLibrary::NCV: return "NCV";
    case GateLibrary::MIXED: return "MIXED";
  }
  return "?";
}

GateLibrary infer_library(std::span<const Gate> gates) {
  bool nct = true, nctsf = true, ncv = true;
  for (const Gate& g : gates) {
    switch (g.kind()) {
      case GateKind::NOT:
      case GateKind::CNOT:
        break;
      case GateKind::TOFFOLI:
        ncv = false;
        break;
      case GateKind::SWAP:
      case GateKind::FREDKIN:
        nct = false;
        ncv = false;
        break;
      case GateKind::V:
      case GateKind::V_DAG:
      case GateKind::CV:
      case GateKind::CV_DAG:
        nct = false;
        nctsf = false;
        break;
      case GateKind::PERES:
      case GateKind::FUSED:
        nct = nctsf = ncv = false;
        break;
    }
  }
  if (nct) return GateLibrary::NCT;
  if (nctsf) return GateLibrary::NCTSF;
  if (ncv) return GateLibrary::NCV;
  return GateLibrary::MIXED;
}

namespace {

void check_gate(const Gate& g, std::size_t n_lines) {
  if (g.max_line() >= n_lines) {
    throw StructuralError("gate " + g.to_string() + " references a line outside [0, " +
                          std::to_string(n_lines) + ")");
  }
}

}  // namespace

Circuit::Circuit(std::size_t n_lines, std::vector<LineRole> roles,
                 std::vector<Gate> gates)
    : roles_(std::move(roles)), gates_(std::move(gates)) {
  if (n_lines == 0) throw StructuralError("a circuit needs at least one line");
  if (roles_.size() != n_lines) {
    throw StructuralError("expected " + std::to_string(n_lines) +
                          " line roles, got " + std::to_string(roles_.size()));
  }
  for (const Gate& g : gates_) check_gate(g, n_lines);
}

Circuit Circuit::with_gates(std::vector<Gate> gates) const {
  return Circuit(n_lines(), roles_, std::move(gates));
}

Circuit Circuit::with_roles(std::vector<LineRole> roles) const {
  return Circuit(n_lines(), std::move(roles), gates_);
}

Circuit identity_circuit(std::size_t n_lines) {
  return Circuit(n_lines, std::vector<LineRole>(n_lines, roles::pi));
}

Circuit new_circuit(std::size_t n_lines, std::vector<LineRole> roles) {
  return Circuit(n_lines, std::move(roles));
}

Circuit append_gate(Circuit c, Gate g) {
  check_gate(g, c.n_lines());
  std::vector<Gate> gates = c.gates();
  gates.push_back(std::move(g));
  return c.with_gates(std::move(gates));
}

std::vector<Gate> inverse_sequence(std::span<const Gate> gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    for (Gate& g : it->inverse()) out.push_back(std::move(g));
  }
  return out;
}

Circuit inverse(const Circuit& c) { return c.with_gates(inverse_sequence(c.gates())); }

Circuit relabel(const Circuit& c, std::span<const Line> mapping) {
  const std::size_t n = c.n_lines();
  if (mapping.size() != n) throw StructuralError("relabel mapping has wrong size");
  std::vector<bool> seen(n, false);
  for (Line l : mapping) {
    if (l >= n || seen[l]) throw StructuralError("relabel mapping is not a permutation");
    seen[l] = true;
  }
  std::vector<LineRole> roles(n);
  for (Line l = 0; l < n; ++l) roles[mapping[l]] = c.role(l);
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (const Gate& g : c.gates()) gates.push_back(g.remapped(mapping));
  return Circuit(n, std::move(roles), std::move(gates));
}

ResourceCounts resource_counts(const Circuit& c) {
  ResourceCounts r;
  r.gate_count = c.size();
  for (const LineRole& role : c.roles()) {
    if (role.output == OutputRole::Garbage) ++r.garbage;
    if (role.input != InputRole::PrimaryInput) ++r.constants;
  }
  return r;
}

}  // namespace qcost
