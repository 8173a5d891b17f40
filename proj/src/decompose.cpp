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

#include "qcost/decompose.hpp"

#include "qcost/errors.hpp"

namespace qcost {
namespace {

void expect_kind(const Gate& g, GateKind kind) {
  if (g.kind() != kind) {
    throw StructuralError("expected " + std::string(kind_name(kind)) + ", got " +
                          g.to_string());
  }
}

}  // namespace

std::vector<Gate> decompose_toffoli(const Gate& g) {
  expect_kind(g, GateKind::TOFFOLI);
  const Line a = g.controls()[0], b = g.controls()[1], t = g.targets()[0];
  return {Gate::cv(b, t), Gate::cnot(a, b), Gate::cv_dag(b, t), Gate::cnot(a, b),
          Gate::cv(a, t)};
}

std::vector<Gate> decompose_fredkin(const Gate& g) {
  expect_kind(g, GateKind::FREDKIN);
  const Line a = g.controls()[0], b = g.targets()[0], c = g.targets()[1];
  return {Gate::cnot(c, b), Gate::toffoli(a, b, c), Gate::cnot(c, b)};
}

std::vector<Gate> decompose_peres(const Gate& g) {
  expect_kind(g, GateKind::PERES);
  const Line a = g.controls()[0], b = g.controls()[1], t = g.targets()[0];
  return {Gate::toffoli(a, b, t), Gate::cnot(a, b)};
}

std::vector<Gate> decompose_swap(const Gate& g) {
  expect_kind(g, GateKind::SWAP);
  const Line a = g.targets()[0], b = g.targets()[1];
  return {Gate::cnot(a, b), Gate::cnot(b, a), Gate::cnot(a, b)};
}

std::vector<Gate> lower_gate(const Gate& g) {
  std::vector<Gate> step;
  switch (g.kind()) {
    case GateKind::TOFFOLI: return decompose_toffoli(g);
    case GateKind::SWAP: return decompose_swap(g);
    case GateKind::FREDKIN: step = decompose_fredkin(g); break;
    case GateKind::PERES: step = decompose_peres(g); break;
    default: return {g};
  }
  std::vector<Gate> out;
  for (const Gate& part : step) {
    for (Gate& p : lower_gate(part)) out.push_back(std::move(p));
  }
  return out;
}

Circuit to_primitives(const Circuit& c) {
  std::vector<Gate> out;
  out.reserve(c.size());
  for (const Gate& g : c.gates()) {
    for (Gate& p : lower_gate(g)) out.push_back(std::move(p));
  }
  return c.with_gates(std::move(out));
}

std::size_t primitive_weight(const Gate& g) {
  switch (g.kind()) {
    case GateKind::TOFFOLI: return 5;
    case GateKind::FREDKIN: return 7;
    case GateKind::PERES: return 6;
    case GateKind::SWAP: return 3;
    default: return 1;
  }
}

Gate copy_gate(const Circuit& c, Line source, Line fresh_const_zero_line) {
  if (fresh_const_zero_line >= c.n_lines() || source >= c.n_lines()) {
    throw StructuralError("copy gate line out of range");
  }
  if (c.role(fresh_const_zero_line).input != InputRole::ConstantZero) {
    throw PreconditionError("copy target line " + std::to_string(fresh_const_zero_line) +
                            " is not a zero constant");
  }
  return Gate::cnot(source, fresh_const_zero_line);
}

}  // namespace qcost
