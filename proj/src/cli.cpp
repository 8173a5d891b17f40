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

#include "qcost/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcost/adders.hpp"
#include "qcost/errors.hpp"
#include "qcost/io.hpp"
#include "qcost/multiplier.hpp"
#include "qcost/optimize.hpp"
#include "qcost/semantics.hpp"
#include "qcost/templates.hpp"

namespace qcost::cli {
namespace {

namespace fs = std::filesystem;

struct Flags {
  std::string file;
  std::size_t window = 8;
  std::string templates;
  bool porcelain = false;
  std::string emit;
  bool trace = false;
  std::string input;
  std::size_t n = 4;
  std::string adder = "maslov";
  bool exhaustive = false;
  std::optional<std::size_t> samples;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t max_gates = 4;
  std::vector<std::string> specs;
};

// Owns a user template library for the lifetime of one command.
struct OptimizerSetup {
  std::optional<TemplateLibrary> library;
  OptimizeOptions options;
};

OptimizerSetup optimizer_setup(const Flags& f) {
  OptimizerSetup s;
  s.options.window = f.window;
  if (!f.templates.empty()) {
    s.library = builtin_templates();
    s.library->append(load_template_library(f.templates));
  }
  return s;
}

void print_report(std::ostream& out, const std::string& name, const CostReport& r,
                  bool porcelain) {
  if (porcelain) {
    out << name << ',' << r.gate_count << ',' << r.quantum_cost << ',' << r.garbage << ','
        << r.constants << ',' << r.total_cost << '\n';
    return;
  }
  out << "gate_count: " << r.gate_count << '\n'
      << "quantum_cost: " << r.quantum_cost << '\n'
      << "garbage: " << r.garbage << '\n'
      << "constants: " << r.constants << '\n'
      << "total_cost: " << r.total_cost << '\n';
}

std::string gate_list(const std::vector<Gate>& gates) {
  std::string s;
  for (const Gate& g : gates) s += (s.empty() ? "" : " ") + g.to_string();
  return s.empty() ? "(none)" : s;
}

int cmd_cost(const Flags& f, std::ostream& out) {
  OptimizerSetup s = optimizer_setup(f);
  if (s.library) s.options.templates = &*s.library;
  const Circuit c = read_circuit_file(f.file);
  print_report(out, fs::path(f.file).stem().string(), metrics(c, s.options), f.porcelain);
  return kExitOk;
}

int cmd_optimize(const Flags& f, std::ostream& out) {
  OptimizerSetup s = optimizer_setup(f);
  if (s.library) s.options.templates = &*s.library;
  const Circuit c = read_circuit_file(f.file);
  const OptimizeResult r = optimize_with_trace(c, s.options);
  out << "initial_count: " << r.trace.initial_count << '\n'
      << "final_count: " << r.trace.final_count << '\n';
  if (f.trace) {
    for (std::size_t k = 0; k < r.trace.steps.size(); ++k) {
      const TraceStep& step = r.trace.steps[k];
      out << "step " << k + 1 << ' ' << step.rule << " @" << step.position << ": "
          << gate_list(step.before) << " -> " << gate_list(step.after) << '\n';
    }
  }
  // Merged blocks are written out as the primitives they were built from.
  const Circuit flat = unfuse(r.circuit);
  if (!f.emit.empty()) {
    write_circuit_file(f.emit, flat);
  } else {
    out << emit_tfc(flat);
  }
  return kExitOk;
}

int cmd_simulate(const Flags& f, std::ostream& out) {
  const Circuit c = read_circuit_file(f.file);
  out << format_bits(simulate_basis(c, parse_bits(f.input))) << '\n';
  return kExitOk;
}

int cmd_gen_multiplier(const Flags& f, std::ostream& out) {
  OptimizerSetup s = optimizer_setup(f);
  if (s.library) s.options.templates = &*s.library;
  const MultiplierSpec spec{f.n, f.adder, PpgcStyle::TOFFOLI_ONLY, {}};
  const Multiplier m = gen_multiplier(spec);
  if (!f.emit.empty()) write_circuit_file(f.emit, m.circuit);
  if (!f.porcelain) {
    out << "design: " << spec_name(spec) << '\n'
        << "lines: " << m.circuit.n_lines() << '\n'
        << "full_adders: " << m.full_adders << '\n'
        << "half_adders: " << m.half_adders << '\n';
  }
  print_report(out, spec_name(spec), metrics(m.circuit, s.options), f.porcelain);
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const Circuit c = read_circuit_file(f.file);
  VerifyOptions opts;
  opts.exhaustive = f.exhaustive;
  opts.samples = f.samples;
  opts.seed = f.seed;
  const VerifyResult r = verify_multiplier(c, f.n, opts);
  if (r.passed) {
    out << "PASS " << r.checked << " pairs (" << (r.exhaustive ? "exhaustive" : "sampled")
        << ")\n";
    return kExitOk;
  }
  out << "FAIL x=" << r.x << " y=" << r.y << " expected " << r.x * r.y << " got " << r.got
      << '\n';
  return kExitVerifyFailed;
}

int cmd_enumerate(const Flags& f, std::ostream& out) {
  const std::vector<AdderBlock> blocks = enumerate_full_adders(f.max_gates);
  const Circuit maslov = full_adder_maslov().circuit;
  out << blocks.size() << " full adders\n";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const AdderBlock& b = blocks[k];
    out << "block " << k << ": " << gate_list(b.circuit.gates()) << "  sum=l" << b.sum_line
        << " carry=l" << b.carry_line << " ancilla=l" << b.pinout.ancilla
        << " qc=" << quantum_cost(b.circuit)
        << (same_block_class(b.circuit, maslov) ? " (maslov class)" : "") << '\n';
  }
  if (f.max_gates >= 4) {
    for (const std::string& name : adder_names()) {
      const AdderBlock b = named_adder(name);
      out << name << ": " << gate_list(b.circuit.gates()) << "  sum=l" << b.sum_line
          << " carry=l" << b.carry_line << " ancilla=l" << b.pinout.ancilla << '\n';
    }
  }
  return kExitOk;
}

int cmd_universality(const Flags& f, std::ostream& out) {
  const UniversalityResult r = universality(read_circuit_file(f.file));
  out << (r.universal ? "true" : "false") << '\n';
  if (r.universal) out << "witness: " << r.witness << '\n';
  return kExitOk;
}

// {"designs": [{"name": ..., "generate": {"n": 4, "adder": "maslov"}},
//              {"name": ..., "file": "path", "n": 4}]}
void read_spec(const fs::path& path, std::vector<MultiplierSpec>& specs,
               std::vector<NamedCircuit>& external) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, path.string() + ": " + e.what());
  }
  try {
    for (const auto& d : doc.at("designs")) {
      if (d.contains("generate")) {
        const auto& g = d.at("generate");
        specs.push_back({g.at("n").get<std::size_t>(), g.value("adder", std::string("maslov")),
                         PpgcStyle::TOFFOLI_ONLY, d.value("name", std::string())});
      } else {
        fs::path file = d.at("file").get<std::string>();
        if (file.is_relative()) file = path.parent_path() / file;
        external.push_back({d.value("name", file.stem().string()), read_circuit_file(file),
                            d.at("n").get<std::size_t>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, path.string() + ": " + e.what());
  }
}

int cmd_compare(const Flags& f, std::ostream& out) {
  OptimizerSetup s = optimizer_setup(f);
  if (s.library) s.options.templates = &*s.library;
  std::vector<MultiplierSpec> specs;
  std::vector<NamedCircuit> external;
  for (const std::string& path : f.specs) read_spec(path, specs, external);
  const std::vector<ComparisonRow> rows = compare(specs, external, s.options);
  out << (f.porcelain ? format_rows(rows) : format_table(rows));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum cost evaluation and reversible multiplier generation", "qcost"};
  app.require_subcommand(1, 1);
  Flags f;

  const auto add_optimizer_flags = [&](CLI::App* cmd) {
    cmd->add_option("--window", f.window, "Moving-rule lookahead")->check(CLI::PositiveNumber);
    cmd->add_option("--templates", f.templates, "Extra identity templates (TFC)")
        ->check(CLI::ExistingFile);
  };

  CLI::App* cost = app.add_subcommand("cost", "Cost report of a circuit");
  cost->add_option("file", f.file)->required();
  cost->add_flag("--porcelain", f.porcelain, "One comma-separated row");
  add_optimizer_flags(cost);

  CLI::App* optimize = app.add_subcommand("optimize", "Optimized primitive circuit");
  optimize->add_option("file", f.file)->required();
  optimize->add_option("--emit", f.emit, "Write the circuit here instead of stdout");
  optimize->add_flag("--trace", f.trace, "Print every rewrite");
  add_optimizer_flags(optimize);

  CLI::App* simulate = app.add_subcommand("simulate", "Run a classical circuit on one input");
  simulate->add_option("file", f.file)->required();
  simulate->add_option("--input", f.input, "One bit per line, line 0 first")->required();

  CLI::App* gen = app.add_subcommand("gen-multiplier", "Generate an n x n multiplier");
  gen->add_option("--n", f.n)->required()->check(CLI::Range(2, 64));
  gen->add_option("--adder", f.adder, "maslov, pfag, a1, a2 or a3");
  gen->add_option("--emit", f.emit, "Write the circuit here");
  gen->add_flag("--porcelain", f.porcelain, "One comma-separated row");
  add_optimizer_flags(gen);

  CLI::App* verify = app.add_subcommand("verify-multiplier", "Check products by simulation");
  verify->add_option("file", f.file)->required();
  verify->add_option("--n", f.n)->required()->check(CLI::Range(1, 64));
  auto* exhaustive = verify->add_flag("--exhaustive", f.exhaustive, "Every operand pair");
  verify->add_option("--samples", f.samples, "Random operand pairs")->excludes(exhaustive);
  verify->add_option("--seed", f.seed, "Sampling seed");

  CLI::App* enumerate = app.add_subcommand("enumerate-adders", "List 4-line NCT full adders");
  enumerate->add_option("--max-gates", f.max_gates)->check(CLI::Range(1, 5));

  CLI::App* universal = app.add_subcommand("universality", "Functional completeness check");
  universal->add_option("file", f.file)->required();

  CLI::App* cmp = app.add_subcommand("compare", "Cost table of multiplier designs");
  cmp->add_option("--spec", f.specs, "JSON design list")->required()->check(CLI::ExistingFile);
  cmp->add_flag("--porcelain", f.porcelain, "Comma-separated rows");
  add_optimizer_flags(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cost->parsed()) return cmd_cost(f, out);
    if (optimize->parsed()) return cmd_optimize(f, out);
    if (simulate->parsed()) return cmd_simulate(f, out);
    if (gen->parsed()) return cmd_gen_multiplier(f, out);
    if (verify->parsed()) return cmd_verify(f, out);
    if (enumerate->parsed()) return cmd_enumerate(f, out);
    if (universal->parsed()) return cmd_universality(f, out);
    if (cmp->parsed()) return cmd_compare(f, out);
  } catch (const Error& e) {
    err << "qcost: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qcost::cli
