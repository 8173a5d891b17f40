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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qcost/circuit.hpp"

namespace qcost {

/// A gate sequence whose overall action is the identity.
class Template {
 public:
  /// Throws PreconditionError unless `c` composes to the identity.
  static Template from_circuit(Circuit c);

  const Circuit& circuit() const { return circuit_; }
  const std::vector<Gate>& gates() const { return circuit_.gates(); }
  std::size_t size() const { return circuit_.size(); }
  std::size_t n_lines() const { return circuit_.n_lines(); }

 private:
  explicit Template(Circuit c) : circuit_(std::move(c)) {}

  Circuit circuit_;
};

class TemplateLibrary {
 public:
  TemplateLibrary() = default;
  explicit TemplateLibrary(std::vector<Template> templates)
      : templates_(std::move(templates)) {}

  void add(Template t) { templates_.push_back(std::move(t)); }
  void append(const TemplateLibrary& other);

  const std::vector<Template>& templates() const { return templates_; }
  std::size_t size() const { return templates_.size(); }
  bool empty() const { return templates_.empty(); }

 private:
  std::vector<Template> templates_;
};

/**
 * Every identity over {NOT, CNOT, CV, CV_DAG} on `max_lines` lines with
 * 2..max_size gates that has no shorter identity as a cyclic factor, one
 * representative per class under rotation, inversion and line relabeling.
 * Output is sorted by size, then by encoding, and each template is
 * compacted onto the lines it uses.
 */
std::vector<Circuit> enumerate_identity_templates(std::size_t max_lines = 3,
                                                  std::size_t max_size = 6);

/// Toffoli-level identity: the three-Toffoli controlled swap followed by the
/// inverse of its CNOT-conjugated single-Toffoli form.
Circuit fredkin_template();

/// Parses a multi-circuit TFC file into validated templates.
TemplateLibrary parse_template_library(std::string_view tfc_text);
TemplateLibrary load_template_library(const std::filesystem::path& path);

/// The shipped library: the enumerated NCV templates plus fredkin_template().
const TemplateLibrary& builtin_templates();

}  // namespace qcost
