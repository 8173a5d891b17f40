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

#include <catch2/catch_amalgamated.hpp>

#include "qcost/decompose.hpp"
#include "qcost/errors.hpp"
#include "qcost/semantics.hpp"
#include "test_support.hpp"

namespace qcost {
namespace {

using testing::make;

bool same_action(const Gate& g, const std::vector<Gate>& seq, std::size_t n) {
  return equivalent_gates(std::vector<Gate>{g}, seq, n);
}

TEST_CASE("Toffoli lowers to five primitives", "[decompose]") {
  const auto seq = decompose_toffoli(Gate::toffoli(0, 1, 2));
  CHECK(seq == std::vector<Gate>{Gate::cv(1, 2), Gate::cnot(0, 1), Gate::cv_dag(1, 2),
                                 Gate::cnot(0, 1), Gate::cv(0, 2)});
  CHECK(same_action(Gate::toffoli(0, 1, 2), seq, 3));
  CHECK(same_action(Gate::toffoli(3, 0, 1), decompose_toffoli(Gate::toffoli(3, 0, 1)), 4));
  CHECK_THROWS_AS(decompose_toffoli(Gate::cnot(0, 1)), StructuralError);
}

TEST_CASE("Fredkin lowers through a CNOT-conjugated Toffoli", "[decompose]") {
  const Gate f = Gate::fredkin(0, 1, 2);
  const auto seq = decompose_fredkin(f);
  CHECK(seq == std::vector<Gate>{Gate::cnot(2, 1), Gate::toffoli(0, 1, 2), Gate::cnot(2, 1)});
  CHECK(same_action(f, seq, 3));
  const auto flat = lower_gate(f);
  CHECK(flat.size() == 7);
  CHECK(same_action(f, flat, 3));
}

TEST_CASE("Peres and SWAP expansions", "[decompose]") {
  const Gate p = Gate::peres(2, 0, 1);
  CHECK(decompose_peres(p) == std::vector<Gate>{Gate::toffoli(2, 0, 1), Gate::cnot(2, 0)});
  CHECK(same_action(p, lower_gate(p), 3));
  CHECK(lower_gate(p).size() == 6);

  const Gate s = Gate::swap(0, 1);
  CHECK(decompose_swap(s) == std::vector<Gate>{Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cnot(0, 1)});
  CHECK(same_action(s, lower_gate(s), 2));
}

TEST_CASE("primitive weight is the lowered length", "[decompose][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Gate g = testing::random_gate(rng, 4);
    const auto lowered = lower_gate(g);
    CHECK(primitive_weight(g) == lowered.size());
    for (const Gate& p : lowered) CHECK(is_primitive(p.kind()));
  }
}

TEST_CASE("lowering preserves the unitary and the roles", "[decompose][property]") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Gate> gates;
    for (int k = 0; k < 6; ++k) gates.push_back(testing::random_gate(rng, 4));
    const Circuit c(4, {roles::pi, roles::const0, roles::garbage(roles::pi), roles::const1}, gates);
    const Circuit low = to_primitives(c);
    CHECK(low.roles() == c.roles());
    CHECK(low.n_lines() == c.n_lines());
    CHECK(equivalent(low, c));
  }
}

TEST_CASE("copy gate fans out onto a zero constant", "[decompose]") {
  const Circuit c(2, {roles::pi, roles::const0});
  const Gate g = copy_gate(c, 0, 1);
  CHECK(g == Gate::cnot(0, 1));
  const Circuit copy = c.with_gates({g});
  CHECK(format_bits(simulate_basis(copy, parse_bits("10"))) == "11");
  CHECK(format_bits(simulate_basis(copy, parse_bits("00"))) == "00");
  CHECK_THROWS_AS(copy_gate(identity_circuit(2), 0, 1), PreconditionError);
  CHECK_THROWS_AS(copy_gate(c, 0, 2), StructuralError);
}

}  // namespace
}  // namespace qcost
