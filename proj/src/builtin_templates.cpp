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

#include "internal/template_text.hpp"
#include "qcost/templates.hpp"

namespace qcost {

const TemplateLibrary& builtin_templates() {
  static const TemplateLibrary lib = [] {
    TemplateLibrary l = parse_template_library(detail::enumerated_template_text());
    l.add(Template::from_circuit(fredkin_template()));
    return l;
  }();
  return lib;
}

}  // namespace qcost
