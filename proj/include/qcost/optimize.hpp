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
#include <string>
#include <utility>
#include <vector>

#include "qcost/circuit.hpp"
#include "qcost/templates.hpp"

namespace qcost {

/// One rewrite: the `before` gates found at `position` became `after`.
struct TraceStep {
  std::string rule;  // "decompose", "deletion", "moving" or "template"
  std::size_t position = 0;
  std::vector<Gate> before;
  std::vector<Gate> after;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct OptimizeTrace {
  std::vector<TraceStep> steps;
  std::size_t initial_count = 0;  // primitives after lowering
  std::size_t final_count = 0;

  std::size_t count(const std::string& rule) const;
};

struct OptimizeOptions {
  /// Moving-rule lookahead: partners at most this many positions apart.
  std::size_t window = 8;
  /// Template library; nullptr selects builtin_templates().
  const TemplateLibrary* templates = nullptr;
  bool use_templates = true;
  /// Also optimize the reversed circuit and the mirrored Toffoli lowering,
  /// and keep the shortest result.
  bool both_directions = true;
  /// Also try a lowering that picks each Toffoli's control order and
  /// orientation by optimizing it against its neighbours.
  bool choose_lowering = true;
  /// Results on at most this many lines are checked against the input.
  std::size_t verify_lines = 6;
};

/**
 * Deletion rule. Any two adjacent gates acting on at most two lines in total
 * are replaced by their product: nothing when it is the identity, a single
 * named primitive when it is one (CV·CV -> CNOT, V·V -> NOT, ...), and a
 * FUSED gate otherwise. Non-primitive gates throw PreconditionError.
 */
std::pair<Circuit, bool> apply_deletion(const Circuit& c,
                                        std::vector<TraceStep>* trace = nullptr);

/**
 * Moving rule. Finds the first pair of gates at most `window` positions apart
 * that the deletion rule would shrink and whose gates in between can be
 * commuted out of the way, then makes them adjacent with adjacent
 * transpositions of commuting gates. One pair per call; the gate multiset is
 * unchanged.
 */
std::pair<Circuit, bool> apply_moving(const Circuit& c, std::size_t window = 8,
                                      std::vector<TraceStep>* trace = nullptr);

/**
 * Template rule. The leftmost, then longest, contiguous run matching a cyclic
 * rotation of a template or of its inverse (up to line relabeling) is
 * replaced by the inverse of the unmatched remainder, provided this lowers
 * the primitive weight of the run. One replacement per call.
 */
std::pair<Circuit, bool> apply_templates(const Circuit& c, const TemplateLibrary& lib,
                                         std::vector<TraceStep>* trace = nullptr);

struct OptimizeResult {
  Circuit circuit;
  OptimizeTrace trace;
};

/// Lowers to primitives and iterates deletion, moving, templates to a
/// fixpoint. The trace starts with the lowering steps, so replay() from the
/// input reproduces `circuit`.
OptimizeResult optimize_with_trace(const Circuit& c, const OptimizeOptions& options = {});

std::size_t quantum_cost(const Circuit& c, const OptimizeOptions& options = {});

/// Applies every step in order, checking that each `before` matches.
Circuit replay(const Circuit& input, const OptimizeTrace& trace);

/// Replaces each FUSED gate by the primitives it was built from.
Circuit unfuse(const Circuit& c);

}  // namespace qcost
