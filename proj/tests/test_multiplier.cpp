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
#include <map>

#include "qcost/errors.hpp"
#include "qcost/multiplier.hpp"
#include "qcost/semantics.hpp"

namespace qcost {
namespace {

std::size_t count_kind(const Circuit& c, GateKind kind) {
  return std::count_if(c.gates().begin(), c.gates().end(),
                       [kind](const Gate& g) { return g.kind() == kind; });
}

// Drives the circuit line by line: x_i on line i, y_j on line n+j, product
// bit k read from line 2n+k.
std::uint64_t product_by_simulation(const Circuit& c, std::size_t n, std::uint64_t x,
                                    std::uint64_t y) {
  BitVector in(c.n_lines(), false);
  for (std::size_t i = 0; i < n; ++i) {
    in[i] = (x >> i) & 1u;
    in[n + i] = (y >> i) & 1u;
  }
  for (Line l = 0; l < c.n_lines(); ++l)
    if (c.role(l).input == InputRole::ConstantOne) in[l] = true;
  const BitVector out = simulate_basis(c, in);
  for (std::size_t i = 0; i < n; ++i) {
    REQUIRE(out[i] == in[i]);
    REQUIRE(out[n + i] == in[n + i]);
  }
  std::uint64_t p = 0;
  for (std::size_t k = 0; k < 2 * n; ++k) p |= std::uint64_t{out[2 * n + k]} << k;
  return p;
}

TEST_CASE("partial products", "[multiplier]") {
  const Circuit pp = gen_ppgc(4);
  CHECK(pp.n_lines() == 24);
  CHECK(pp.size() == 16);
  CHECK(count_kind(pp, GateKind::TOFFOLI) == 16);
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < 16; ++y) {
      BitVector in(24, false);
      for (std::size_t i = 0; i < 4; ++i) {
        in[i] = (x >> i) & 1u;
        in[4 + i] = (y >> i) & 1u;
      }
      const BitVector out = simulate_basis(pp, in);
      for (std::size_t i = 0; i < 8; ++i) CHECK(out[i] == in[i]);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          CHECK(out[ppgc_line(4, i, j)] == (in[i] && in[4 + j]));
    }
  CHECK_THROWS_AS(gen_ppgc(1), PreconditionError);
}

TEST_CASE("adder array sizes", "[multiplier]") {
  const AdderBlock fa = full_adder_maslov();
  const AdderArray a4 = gen_rpa(4, fa);
  CHECK(a4.full_adders == 8);
  CHECK(a4.half_adders == 4);
  CHECK(a4.product_lines.size() == 8);
  const AdderArray a2 = gen_rpa(2, fa);
  CHECK(a2.full_adders == 0);
  CHECK(a2.half_adders == 2);
  for (std::size_t n = 2; n <= 6; ++n) {
    const AdderArray a = gen_rpa(n, fa);
    CHECK(a.half_adders == n);
    CHECK(a.full_adders == n * (n - 2));
  }
  CHECK_THROWS_AS(gen_rpa(4, half_adder()), PreconditionError);
  CHECK_THROWS_AS(gen_rpa(4, fa, fa), PreconditionError);
}

TEST_CASE("multipliers compute x*y", "[multiplier][oracle]") {
  for (std::size_t n : {2, 3, 4}) {
    for (const char* adder : {"maslov", "a1", "a2", "a3"}) {
      const Multiplier m = gen_multiplier({n, adder, PpgcStyle::TOFFOLI_ONLY, {}});
      for (std::uint64_t x = 0; x < (1u << n); ++x)
        for (std::uint64_t y = 0; y < (1u << n); ++y)
          REQUIRE(product_by_simulation(m.circuit, n, x, y) == x * y);
      const VerifyResult v = verify_multiplier(m.circuit, n);
      CHECK(v.passed);
      CHECK(v.exhaustive);
      CHECK(v.checked == (std::size_t{1} << (2 * n)));
    }
  }
}

TEST_CASE("wider multipliers are sampled", "[multiplier]") {
  const Multiplier m = gen_multiplier({6, "maslov", PpgcStyle::TOFFOLI_ONLY, {}});
  VerifyOptions opts;
  opts.samples = 300;
  const VerifyResult v = verify_multiplier(m.circuit, 6, opts);
  CHECK(v.passed);
  CHECK_FALSE(v.exhaustive);
  CHECK(v.checked == 300);
  CHECK(verify_multiplier(m.circuit, 6, opts).checked == v.checked);
  CHECK_THROWS_AS(verify_multiplier(m.circuit, 9), ResourceError);
}

TEST_CASE("a broken multiplier is caught", "[multiplier]") {
  const Multiplier m = gen_multiplier({3, "maslov", PpgcStyle::TOFFOLI_ONLY, {}});
  std::vector<Gate> gates = m.circuit.gates();
  gates.erase(gates.begin() + 2);
  const VerifyResult v = verify_multiplier(m.circuit.with_gates(gates), 3);
  CHECK_FALSE(v.passed);
  CHECK(v.got != v.x * v.y);
  CHECK_THROWS_AS(multiplier_pinout(identity_circuit(4), 3), PreconditionError);
}

TEST_CASE("cost report", "[multiplier]") {
  const Multiplier m = gen_multiplier({4, "maslov", PpgcStyle::TOFFOLI_ONLY, {}});
  CHECK(m.full_adders == 8);
  CHECK(m.half_adders == 4);
  const CostReport r = metrics(m.circuit);
  CHECK(r.gate_count == 16 + 4 * 8 + 2 * 4);
  CHECK(r.total_cost == r.gate_count + r.quantum_cost + r.garbage);
  CHECK(r.constants == 16 + 12);
  CHECK(r.garbage == 20);
  CHECK(r.quantum_cost == 144);
  // Every Toffoli at 5 plus every block at its own cost bounds the result.
  const std::size_t bound = 5 * 16 + 8 * quantum_cost(full_adder_maslov().circuit) +
                            4 * quantum_cost(half_adder().circuit);
  CHECK(r.quantum_cost <= bound);
}

TEST_CASE("monotone bound across widths", "[multiplier][property]") {
  for (std::size_t n : {2, 3, 5}) {
    const Multiplier m = gen_multiplier({n, "a2", PpgcStyle::TOFFOLI_ONLY, {}});
    const std::size_t bound = 5 * n * n + m.full_adders * quantum_cost(named_adder("a2").circuit) +
                              m.half_adders * quantum_cost(half_adder().circuit);
    const CostReport r = metrics(m.circuit);
    CHECK(r.quantum_cost <= bound);
    CHECK(r.total_cost == r.gate_count + r.quantum_cost + r.garbage);
  }
}

TEST_CASE("comparison table", "[multiplier]") {
  CHECK(compare({}, {}).empty());
  const Multiplier ext = gen_multiplier({2, "maslov", PpgcStyle::TOFFOLI_ONLY, {}});
  std::vector<Gate> broken = ext.circuit.gates();
  broken.pop_back();
  const auto rows = compare({{3, "maslov", PpgcStyle::TOFFOLI_ONLY, {}},
                             {2, "a1", PpgcStyle::TOFFOLI_ONLY, "mine"}},
                            {{"ext", ext.circuit.with_gates(broken), 2}});
  REQUIRE(rows.size() == 3);
  for (std::size_t k = 1; k < rows.size(); ++k)
    CHECK(rows[k - 1].report.total_cost <= rows[k].report.total_cost);
  std::map<std::string, bool> verified;
  for (const ComparisonRow& r : rows) verified[r.name] = r.verified;
  CHECK(verified.at("proposed-n3-maslov"));
  CHECK(verified.at("mine"));
  CHECK_FALSE(verified.at("ext"));

  const std::string csv = format_rows(rows);
  CHECK(csv.find("proposed-n3-maslov,27,75,") != std::string::npos);
  CHECK(format_table(rows).rfind("design", 0) == 0);
}

}  // namespace
}  // namespace qcost
