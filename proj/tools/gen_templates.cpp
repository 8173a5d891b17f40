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

// Writes the enumerated template library as a C++ source file.
//
//   gen_templates <out.cpp> [out.tfc]

#include <fstream>
#include <iostream>

#include "qcost/io.hpp"
#include "qcost/templates.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: gen_templates <out.cpp> [out.tfc]\n";
    return 2;
  }
  const std::vector<qcost::Circuit> templates = qcost::enumerate_identity_templates(3, 6);
  const std::string text = qcost::emit_tfc_list(templates);

  std::ofstream cpp(argv[1]);
  cpp << "// Generated by gen_templates. Do not edit.\n"
      << "#include \"internal/template_text.hpp\"\n\n"
      << "namespace qcost::detail {\n\n"
      << "std::string_view enumerated_template_text() {\n"
      << "  static constexpr char kText[] = R\"qcost(" << text << ")qcost\";\n"
      << "  return {kText, sizeof(kText) - 1};\n"
      << "}\n\n"
      << "}  // namespace qcost::detail\n";
  if (argc > 2) std::ofstream(argv[2]) << text;
  std::cout << templates.size() << " templates\n";
  return cpp ? 0 : 1;
}
