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
#include "qcost/optimize.hpp"
#include "qcost/semantics.hpp"
#include "test_support.hpp"

namespace qcost {
namespace {

using testing::make;

// Applies the steps one at a time and checks the unitary after each.
bool every_step_sound(const Circuit& input, const OptimizeTrace& trace) {
  const ExactUnitary target = unitary_of(input);
  std::vector<Gate> gates = input.gates();
  for (const TraceStep& s : trace.steps) {
    if (s.position + s.before.size() > gates.size()) return false;
    if (!std::equal(s.before.begin(), s.before.end(), gates.begin() + s.position)) return false;
    gates.erase(gates.begin() + s.position, gates.begin() + s.position + s.before.size());
    gates.insert(gates.begin() + s.position, s.after.begin(), s.after.end());
    if (!(unitary_of_gates(gates, input.n_lines()) == target)) return false;
  }
  return true;
}

TEST_CASE("deletion rule", "[optimize]") {
  const auto del = [](std::vector<Gate> g, std::size_t n) {
    return apply_deletion(make(n, std::move(g)));
  };
  CHECK(del({Gate::cv(0, 2), Gate::cv_dag(0, 2)}, 3).first.empty());
  CHECK(del({Gate::cnot(0, 1), Gate::cnot(0, 1)}, 2).first.empty());
  CHECK(del({Gate::cv(0, 2), Gate::cv(0, 2)}, 3).first.gates() ==
        std::vector<Gate>{Gate::cnot(0, 2)});
  CHECK(del({Gate::v(1), Gate::v(1)}, 2).first.gates() == std::vector<Gate>{Gate::not_gate(1)});
  // Nested cancellation collapses completely.
  CHECK(del({Gate::cnot(0, 1), Gate::cv(1, 0), Gate::cv_dag(1, 0), Gate::cnot(0, 1)}, 2)
            .first.empty());

  const auto [same, changed] = del({Gate::cnot(0, 1), Gate::cnot(1, 2)}, 3);
  CHECK_FALSE(changed);
  CHECK(same.size() == 2);
  CHECK_THROWS_AS(del({Gate::toffoli(0, 1, 2)}, 3), PreconditionError);
}

TEST_CASE("two-line neighbours fuse into one unit", "[optimize]") {
  const auto [c, changed] = apply_deletion(make(2, {Gate::cv(0, 1), Gate::cnot(1, 0)}));
  CHECK(changed);
  REQUIRE(c.size() == 1);
  CHECK(c.gates()[0].kind() == GateKind::FUSED);
  CHECK(unfuse(c) == make(2, {Gate::cv(0, 1), Gate::cnot(1, 0)}));
  CHECK(quantum_cost(make(2, {Gate::swap(0, 1)})) == 1);
}

TEST_CASE("moving rule", "[optimize]") {
  // CNOT(0,2) commutes with CNOT(0,1), so the two CNOT(0,1) meet.
  const Circuit c = make(3, {Gate::cnot(0, 1), Gate::cnot(0, 2), Gate::cnot(0, 1)});
  std::vector<TraceStep> steps;
  const auto [moved, changed] = apply_moving(c, 8, &steps);
  CHECK(changed);
  CHECK(equivalent(moved, c));
  REQUIRE_FALSE(steps.empty());
  for (const TraceStep& s : steps) CHECK(s.rule == "moving");
  CHECK(apply_deletion(moved).first.size() == 1);

  // A blocker that does not commute stops the move.
  const Circuit blocked = make(3, {Gate::cnot(0, 1), Gate::cnot(1, 2), Gate::cnot(0, 1)});
  CHECK_FALSE(apply_moving(blocked).second);
  CHECK(apply_moving(blocked).first == blocked);

  // Partners further apart than the window are ignored.
  const Circuit far = make(5, {Gate::cnot(0, 1), Gate::cnot(2, 3), Gate::cnot(4, 2),
                               Gate::cnot(0, 1)});
  CHECK_FALSE(apply_moving(far, 2).second);
  CHECK(apply_moving(far, 3).second);
}

TEST_CASE("template rule", "[optimize]") {
  TemplateLibrary nn;
  nn.add(Template::from_circuit(make(1, {Gate::not_gate(0), Gate::not_gate(0)})));
  const auto [one, changed] =
      apply_templates(make(2, {Gate::not_gate(1), Gate::not_gate(1), Gate::not_gate(1)}), nn);
  CHECK(changed);
  CHECK(one.gates() == std::vector<Gate>{Gate::not_gate(1)});
  CHECK_FALSE(apply_templates(make(2, {Gate::cnot(0, 1)}), nn).second);

  // Three-Toffoli controlled swap becomes one Toffoli between two CNOTs.
  const Circuit three = make(3, {Gate::toffoli(0, 2, 1), Gate::toffoli(0, 1, 2),
                                 Gate::toffoli(0, 2, 1)});
  TemplateLibrary lib;
  lib.add(Template::from_circuit(fredkin_template()));
  std::vector<TraceStep> steps;
  const auto [reduced, hit] = apply_templates(three, lib, &steps);
  CHECK(hit);
  CHECK(reduced.size() == 3);
  CHECK(std::count_if(reduced.gates().begin(), reduced.gates().end(),
                      [](const Gate& g) { return g.kind() == GateKind::TOFFOLI; }) == 1);
  CHECK(equivalent(reduced, three));
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].rule == "template");
}

TEST_CASE("published costs", "[optimize]") {
  CHECK(quantum_cost(make(3, {Gate::toffoli(0, 1, 2)})) == 5);
  CHECK(quantum_cost(make(3, {Gate::fredkin(0, 1, 2)})) == 5);
  CHECK(quantum_cost(make(3, {Gate::peres(0, 1, 2)})) == 4);
  CHECK(quantum_cost(make(4, {Gate::toffoli(0, 1, 3), Gate::cnot(0, 1), Gate::toffoli(1, 2, 3),
                              Gate::cnot(1, 2)})) == 6);
  CHECK(quantum_cost(identity_circuit(3)) == 0);
}

TEST_CASE("Fredkin trace", "[optimize]") {
  const Circuit f = make(3, {Gate::fredkin(0, 1, 2)});
  CHECK(to_primitives(f).size() == 7);
  const OptimizeResult r = optimize_with_trace(f);
  CHECK(r.trace.initial_count == 7);
  CHECK(r.trace.final_count == 5);
  CHECK(r.circuit.size() == 5);
  CHECK(equivalent(r.circuit, f));

  std::size_t moves = 0;
  bool deletion_after_moves = false;
  for (const TraceStep& s : r.trace.steps) {
    if (s.rule == "moving") ++moves;
    if (s.rule == "deletion" && moves >= 2) deletion_after_moves = true;
  }
  CHECK(moves >= 2);
  CHECK(deletion_after_moves);
  CHECK(replay(f, r.trace) == r.circuit);
}

TEST_CASE("two Peres gates in NCV cost six", "[optimize]") {
  // Each Peres as CV(b,t) CV(a,t) CNOT(a,b) CV+(b,t).
  const Circuit ncv = make(4, {Gate::cv(1, 3), Gate::cv(0, 3), Gate::cnot(0, 1),
                               Gate::cv_dag(1, 3), Gate::cv(2, 3), Gate::cv(1, 3),
                               Gate::cnot(1, 2), Gate::cv_dag(2, 3)});
  CHECK(equivalent(ncv, make(4, {Gate::peres(0, 1, 3), Gate::peres(1, 2, 3)})));
  const OptimizeResult r = optimize_with_trace(ncv);
  CHECK(r.trace.initial_count == 8);
  CHECK(r.circuit.size() == 6);
  CHECK(r.trace.count("moving") >= 1);
}

TEST_CASE("optimal input leaves an empty trace", "[optimize]") {
  const Circuit c = make(3, {Gate::cnot(0, 1), Gate::cnot(1, 2)});
  const OptimizeResult r = optimize_with_trace(c);
  CHECK(r.trace.steps.empty());
  CHECK(r.circuit == c);
  CHECK(r.trace.final_count == quantum_cost(c));
}

TEST_CASE("replay rejects a foreign trace", "[optimize]") {
  const Circuit f = make(3, {Gate::fredkin(0, 1, 2)});
  const OptimizeTrace t = optimize_with_trace(f).trace;
  CHECK_THROWS_AS(replay(make(3, {Gate::toffoli(0, 1, 2)}), t), PreconditionError);
}

TEST_CASE("rewrite soundness on random primitive circuits", "[optimize][property]") {
  std::mt19937_64 rng(7);
  std::size_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Circuit c = testing::random_primitive_circuit(rng, 4, 12);
    const OptimizeResult r = optimize_with_trace(c);
    if (!every_step_sound(c, r.trace)) ++violations;
    if (r.trace.final_count > r.trace.initial_count) ++violations;
    if (!(replay(c, r.trace) == r.circuit)) ++violations;
    if (r.trace.final_count != r.circuit.size()) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("cost bounds and symmetries", "[optimize][property]") {
  std::mt19937_64 rng(8);
  std::vector<Line> perm{0, 1, 2, 3};
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Gate> gates;
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    for (std::size_t k = 0; k < len; ++k) gates.push_back(testing::random_gate(rng, 4));
    const Circuit c = make(4, gates);
    const std::size_t qc = quantum_cost(c);
    CHECK(qc <= to_primitives(c).size());
    CHECK(quantum_cost(inverse(c)) == qc);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(quantum_cost(relabel(c, perm)) == qc);
  }
}

}  // namespace
}  // namespace qcost
