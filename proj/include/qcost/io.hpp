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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcost/circuit.hpp"

namespace qcost {

/**
 * TFC dialect.
 *
 *   .v a,b,c,d      line names, in line order
 *   .i a,b,c        primary inputs; every other line is a constant
 *   .c 0            constant values for the non-input lines, in .v order
 *   .o c,d          primary outputs
 *   .g a,b          garbage outputs (lines missing from .o are garbage too)
 *   BEGIN
 *   t3 a,b,d        t1/t2/t3 NOT/CNOT/Toffoli, last name is the target
 *   f3 a,b,c        Fredkin, first name is the control; f2 is SWAP
 *   p3 a,b,d        Peres
 *   v a,b  v+ a,b   controlled V / V+; with one name, the uncontrolled form
 *   END
 *
 * `#` starts a comment. Errors throw ParseError with a 1-based line number.
 */
Circuit parse_tfc(std::string_view text);

/// Several TFC circuits back to back, each starting at its own `.v`.
std::vector<Circuit> parse_tfc_list(std::string_view text);

/// Lines are renamed l0..l{n-1}. FUSED gates throw EmitError.
std::string emit_tfc(const Circuit& c);
std::string emit_tfc_list(std::span<const Circuit> circuits);

/// RevLib `.real` dialect, restricted to gates on at most three lines.
Circuit parse_real(std::string_view text);
std::string emit_real(const Circuit& c);

enum class Dialect { TFC, REAL };

/// By extension first (.tfc / .real), then by content.
Dialect detect_dialect(const std::filesystem::path& path, std::string_view text);

Circuit parse_circuit(std::string_view text, Dialect dialect);
std::string emit_circuit(const Circuit& c, Dialect dialect);

Circuit read_circuit_file(const std::filesystem::path& path);
void write_circuit_file(const std::filesystem::path& path, const Circuit& c);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace qcost
