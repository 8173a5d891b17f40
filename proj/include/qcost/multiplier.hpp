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
#include <optional>
#include <string>
#include <vector>

#include "qcost/adders.hpp"
#include "qcost/circuit.hpp"
#include "qcost/optimize.hpp"

namespace qcost {

enum class PpgcStyle { TOFFOLI_ONLY };

struct MultiplierSpec {
  std::size_t n = 4;
  std::string adder = "maslov";
  PpgcStyle ppgc_style = PpgcStyle::TOFFOLI_ONLY;
  /// Display name; spec_name() derives one when empty.
  std::string name;
};

/**
 * Partial-product generator. Lines x0..x{n-1}, y0..y{n-1}, then p_ij for
 * i-major (i, j) as zero constants; gate (i, j) is TOFFOLI(x_i, y_j -> p_ij).
 */
Circuit gen_ppgc(std::size_t n);

/// Line of p_ij in gen_ppgc(n).
inline Line ppgc_line(std::size_t n, std::size_t i, std::size_t j) { return 2 * n + i * n + j; }

struct AdderArray {
  /// The first n^2 lines carry the partial products p_ij (i-major), followed
  /// by one zero ancilla per adder instance.
  Circuit circuit;
  /// Product bit k sits on product_lines[k].
  std::vector<Line> product_lines;
  std::size_t full_adders = 0;
  std::size_t half_adders = 0;
};

/**
 * Carry-save array summing the partial products: n-1 half adders on the
 * first row, n-1 full adders on each further row, then a ripple stage of one
 * half adder and n-2 full adders.
 */
AdderArray gen_rpa(std::size_t n, const AdderBlock& full, const AdderBlock& half = half_adder());

struct Multiplier {
  /// Lines in order: x0..x{n-1}, y0..y{n-1}, product bits (little-endian),
  /// then garbage. Operands are primary inputs and primary outputs.
  Circuit circuit;
  std::size_t n = 0;
  std::size_t full_adders = 0;
  std::size_t half_adders = 0;
};

Multiplier gen_multiplier(const MultiplierSpec& spec);

/**
 * Operand and product lines of a multiplier circuit: the first 2n primary
 * inputs are x then y, and the primary outputs that are not operands are the
 * product bits in line order. Throws PreconditionError if the shape differs.
 */
struct MultiplierPinout {
  std::vector<Line> x, y, product;
};
MultiplierPinout multiplier_pinout(const Circuit& c, std::size_t n);

struct VerifyOptions {
  /// Exhaustive when unset and n <= 4, otherwise this many random pairs.
  std::optional<std::size_t> samples;
  bool exhaustive = false;
  std::uint64_t seed = 20260101;
};

struct VerifyResult {
  bool passed = true;
  std::size_t checked = 0;
  bool exhaustive = false;
  /// First failing pair.
  std::uint64_t x = 0, y = 0, got = 0;
};

/// Exhaustive for n <= 4 (or when asked, up to 8), sampled for n <= 8;
/// larger n throws ResourceError.
VerifyResult verify_multiplier(const Circuit& c, std::size_t n, const VerifyOptions& options = {});

/// Product read from the circuit for one operand pair.
std::uint64_t multiply_with(const Circuit& c, const MultiplierPinout& pins, std::uint64_t x,
                            std::uint64_t y);

struct CostReport {
  std::size_t gate_count = 0;
  std::size_t quantum_cost = 0;
  std::size_t garbage = 0;
  std::size_t constants = 0;
  std::size_t total_cost = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

CostReport metrics(const Circuit& c, const OptimizeOptions& options = {});

struct NamedCircuit {
  std::string name;
  Circuit circuit;
  std::size_t n = 0;
};

struct ComparisonRow {
  std::string name;
  CostReport report;
  bool verified = false;
};

/// One row per design, verified and costed, sorted by total cost (stable).
std::vector<ComparisonRow> compare(const std::vector<MultiplierSpec>& specs,
                                   const std::vector<NamedCircuit>& external,
                                   const OptimizeOptions& options = {});

std::string spec_name(const MultiplierSpec& spec);

std::string format_table(const std::vector<ComparisonRow>& rows);
/// name,gate_count,quantum_cost,garbage,constants,total_cost,verified
std::string format_rows(const std::vector<ComparisonRow>& rows);

}  // namespace qcost
