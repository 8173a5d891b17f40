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
#include <filesystem>

#include "qcost/errors.hpp"
#include "qcost/io.hpp"
#include "test_support.hpp"

namespace qcost {
namespace {

constexpr const char* kAdder = R"(# one-bit full adder
.v a,b,c,d
.i a,b,c
.c 0
.o c,d
.g a,b
BEGIN
t3 a,b,d
t2 a,b
t3 b,c,d   # second carry term
t2 b,c
END
)";

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_tfc(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST_CASE("TFC header and body", "[io]") {
  const Circuit c = parse_tfc(kAdder);
  REQUIRE(c.n_lines() == 4);
  CHECK(c.role(0) == roles::garbage(roles::pi));
  CHECK(c.role(2) == roles::pi);
  CHECK(c.role(3) == roles::const0);
  CHECK(c.gates() == std::vector<Gate>{Gate::toffoli(0, 1, 3), Gate::cnot(0, 1),
                                       Gate::toffoli(1, 2, 3), Gate::cnot(1, 2)});
}

TEST_CASE("TFC mnemonics", "[io]") {
  const Circuit c = parse_tfc(R"(.v x,y,z
BEGIN
t1 z
f3 x,y,z
f2 x,y
p3 x,y,z
v x,y
V+ y,z
v z
v+ x
END)");
  CHECK(c.gates() == std::vector<Gate>{Gate::not_gate(2), Gate::fredkin(0, 1, 2), Gate::swap(0, 1),
                                       Gate::peres(0, 1, 2), Gate::cv(0, 1), Gate::cv_dag(1, 2),
                                       Gate::v(2), Gate::v_dag(0)});
  // No .i means every line is a primary input; no .o means every line is an output.
  for (const LineRole& r : c.roles()) CHECK(r == roles::pi);
}

TEST_CASE("constants follow .v order", "[io]") {
  const Circuit c = parse_tfc(".v a,b,c\n.i b\n.c 1,0\n.o a,b,c\nBEGIN\nEND\n");
  CHECK(c.role(0).input == InputRole::ConstantOne);
  CHECK(c.role(1).input == InputRole::PrimaryInput);
  CHECK(c.role(2).input == InputRole::ConstantZero);
}

TEST_CASE("TFC errors carry line numbers", "[io]") {
  CHECK(parse_error_line(".v a,b\nBEGIN\nt2 a,q\nEND\n") == 3);
  CHECK(parse_error_line(".v a,b\nBEGIN\nt3 a,b\nEND\n") == 3);
  CHECK(parse_error_line(".v a,b\nBEGIN\nt2 a,a\nEND\n") == 3);
  CHECK(parse_error_line(".v a,b\nBEGIN\nx9 a\nEND\n") == 3);
  CHECK(parse_error_line(".v a,a\nBEGIN\nEND\n") == 1);
  CHECK(parse_error_line(".i a\n.v a\nBEGIN\nEND\n") == 1);
  CHECK(parse_error_line(".v a,b\n.i a\n.c 2\nBEGIN\nEND\n") == 3);
  CHECK(parse_error_line(".v a,b\n.i a\n.c 0,1\nBEGIN\nEND\n") == 3);
  CHECK(parse_error_line(".v a,b\n.o a\n.g a\nBEGIN\nEND\n") == 3);
  CHECK(parse_error_line(".v a\n\n.v b\nBEGIN\nEND\n") == 3);
  CHECK(parse_error_line(".v a\nBEGIN\nt1 a\n") == 3);
  CHECK(parse_error_line(".v a\nBEGIN\nEND\nt1 a\n") == 4);
  CHECK(parse_error_line(".v a\n") == 1);
}

TEST_CASE("emit is deterministic and canonical", "[io]") {
  const Circuit c = parse_tfc(kAdder);
  const std::string text = emit_tfc(c);
  CHECK(text == emit_tfc(c));
  CHECK(text ==
        ".v l0,l1,l2,l3\n.i l0,l1,l2\n.c 0\n.o l2,l3\n.g l0,l1\nBEGIN\n"
        "t3 l0,l1,l3\nt2 l0,l1\nt3 l1,l2,l3\nt2 l1,l2\nEND\n");
  const std::vector<Gate> body{Gate::cv(0, 1), Gate::v(1)};
  const Circuit fused = testing::make(2, {Gate::fused(body)});
  CHECK_THROWS_AS(emit_tfc(fused), EmitError);
  CHECK_THROWS_AS(emit_real(fused), EmitError);
}

TEST_CASE("REAL dialect", "[io]") {
  const Circuit c = parse_real(R"(.version 1.0
.numvars 3
.variables a b c
.inputs a b c
.outputs a b c
.constants --0
.garbage 1--
.begin
t3 a b c
t2 a b
f3 a b c
v b c
v+ b c
.end
)");
  CHECK(c.role(0) == roles::garbage(roles::pi));
  CHECK(c.role(2) == roles::const0);
  CHECK(c.gates() == std::vector<Gate>{Gate::toffoli(0, 1, 2), Gate::cnot(0, 1),
                                       Gate::fredkin(0, 1, 2), Gate::cv(1, 2), Gate::cv_dag(1, 2)});
  CHECK_THROWS_AS(parse_real(".numvars 2\n.variables a\n.begin\n.end\n"), ParseError);
  CHECK_THROWS_AS(parse_real(".numvars 1\n.variables a\n.begin\nt1 a\n"), ParseError);
}

TEST_CASE("round trip over random circuits", "[io][property]") {
  std::mt19937_64 rng(20260101);
  std::size_t tfc_failures = 0, real_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Circuit c = testing::random_circuit(rng);
    if (!(parse_tfc(emit_tfc(c)) == c)) ++tfc_failures;
    if (!(parse_real(emit_real(c)) == c)) ++real_failures;
  }
  CHECK(tfc_failures == 0);
  CHECK(real_failures == 0);
}

TEST_CASE("multi-circuit TFC", "[io]") {
  std::mt19937_64 rng(3);
  std::vector<Circuit> cs;
  for (int k = 0; k < 5; ++k) cs.push_back(testing::random_circuit(rng));
  CHECK(parse_tfc_list(emit_tfc_list(cs)) == cs);
  CHECK(parse_tfc_list("# nothing\n").empty());
}

TEST_CASE("files pick their dialect", "[io]") {
  CHECK(detect_dialect("x.real", "") == Dialect::REAL);
  CHECK(detect_dialect("x.TFC", "") == Dialect::TFC);
  CHECK(detect_dialect("x.txt", ".version 1.0\n.numvars 1\n") == Dialect::REAL);
  CHECK(detect_dialect("x.txt", ".v a\n") == Dialect::TFC);

  const auto dir = std::filesystem::temp_directory_path() / "qcost_io_test";
  std::filesystem::create_directories(dir);
  const Circuit c = parse_tfc(kAdder);
  for (const char* name : {"adder.tfc", "adder.real"}) {
    write_circuit_file(dir / name, c);
    CHECK(read_circuit_file(dir / name) == c);
  }
  CHECK(read_text_file(dir / "adder.real").rfind(".version", 0) == 0);
  CHECK_THROWS_AS(read_circuit_file(dir / "missing.tfc"), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qcost
