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
#include <vector>

#include "qcost/circuit.hpp"
#include "qcost/dyadic.hpp"

namespace qcost {

/// One bit per line, index = line.
using BitVector = std::vector<bool>;

/// Basis-state numbering shared by permutations and unitaries: line 0 is the
/// most significant bit, so the bit string "10" on two lines is state 2.
std::uint64_t state_index(const BitVector& bits);
BitVector state_bits(std::uint64_t index, std::size_t n_lines);

BitVector parse_bits(const std::string& text);
std::string format_bits(const BitVector& bits);

inline constexpr std::size_t kDefaultPermutationBound = 20;
inline constexpr std::size_t kDefaultUnitaryBound = 6;

/// Applies one classical gate in place. Throws SemanticsError otherwise.
void apply_classical(const Gate& g, BitVector& state);

/// Runs a classical circuit on a basis input. Constant lines must carry their
/// declared value (PreconditionError).
BitVector simulate_basis(const Circuit& c, const BitVector& input);

struct Permutation {
  std::size_t n_lines = 0;
  std::vector<std::uint64_t> image;

  bool is_bijection() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation permutation_of(const Circuit& c,
                           std::size_t max_lines = kDefaultPermutationBound);

/// Dense 2^k x 2^k matrix of exact entries, row-major.
class ExactUnitary {
 public:
  explicit ExactUnitary(std::size_t n_lines);

  static ExactUnitary identity(std::size_t n_lines) { return ExactUnitary(n_lines); }

  std::size_t n_lines() const { return n_lines_; }
  std::size_t dim() const { return dim_; }

  const DyadicGaussian& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  DyadicGaussian& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  /// Left-multiplies by the unitary of `g` (i.e. applies g after the
  /// current contents).
  void apply(const Gate& g);

  ExactUnitary adjoint() const;
  bool is_identity() const;
  bool is_unitary() const;

  friend ExactUnitary operator*(const ExactUnitary& a, const ExactUnitary& b);
  friend bool operator==(const ExactUnitary&, const ExactUnitary&) = default;

  std::string to_string() const;

 private:
  std::size_t n_lines_;
  std::size_t dim_;
  std::vector<DyadicGaussian> entries_;
};

ExactUnitary unitary_of_gates(std::span<const Gate> gates, std::size_t n_lines,
                              std::size_t max_lines = kDefaultUnitaryBound);

ExactUnitary unitary_of(const Circuit& c,
                        std::size_t max_lines = kDefaultUnitaryBound);

struct EquivalenceBounds {
  std::size_t unitary_lines = kDefaultUnitaryBound;
  std::size_t permutation_lines = kDefaultPermutationBound;
};

/// Exact equality of the two circuits' actions, with no global-phase slack.
/// Classical pairs are compared as permutations, everything else as unitaries.
bool equivalent(const Circuit& c1, const Circuit& c2, EquivalenceBounds bounds = {});

/// True iff the gate sequences act identically (same n_lines).
bool equivalent_gates(std::span<const Gate> a, std::span<const Gate> b,
                      std::size_t n_lines);

/// Unitary of a gate sequence restricted to the lines it touches. The lines
/// are renumbered 0..k-1 in order of first appearance; `support` receives the
/// original indices.
ExactUnitary local_unitary(std::span<const Gate> gates, std::vector<Line>* support = nullptr);

/// U(g1) U(g2) == U(g2) U(g1), evaluated on the union of their lines.
bool commute(const Gate& g1, const Gate& g2, std::size_t n_lines);

}  // namespace qcost
