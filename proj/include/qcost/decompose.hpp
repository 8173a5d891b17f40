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
#include <vector>

#include "qcost/circuit.hpp"

namespace qcost {

/// TOFFOLI({a,b} -> t) as CV(b,t) CNOT(a,b) CV_DAG(b,t) CNOT(a,b) CV(a,t).
std::vector<Gate> decompose_toffoli(const Gate& g);

/// FREDKIN(a; b,c) as CNOT(c,b) TOFFOLI({a,b} -> c) CNOT(c,b).
std::vector<Gate> decompose_fredkin(const Gate& g);

/// PERES(a,b,t) as TOFFOLI({a,b} -> t) CNOT(a,b).
std::vector<Gate> decompose_peres(const Gate& g);

/// SWAP(a,b) as three alternating CNOTs.
std::vector<Gate> decompose_swap(const Gate& g);

/// Fully lowers one gate to one- and two-line kinds.
std::vector<Gate> lower_gate(const Gate& g);

/// Lowers every macro gate. Lines and roles are untouched.
Circuit to_primitives(const Circuit& c);

/// Primitive count of `lower_gate(g)` without building it.
std::size_t primitive_weight(const Gate& g);

/// Fan-out substitute: CNOT from `source` onto a fresh zero ancilla. The
/// circuit is consulted only to check the ancilla's role.
Gate copy_gate(const Circuit& c, Line source, Line fresh_const_zero_line);

}  // namespace qcost
