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
#include <fstream>
#include <sstream>

#include "qcost/cli.hpp"
#include "qcost/io.hpp"

namespace qcost {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome qcost(std::vector<std::string> args) {
  args.insert(args.begin(), "qcost");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string circuit(const char* name) { return (fs::path(QCOST_CIRCUITS_DIR) / name).string(); }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "qcost_cli_test";
  fs::create_directories(dir);
  return dir;
}

TEST_CASE("cost", "[cli]") {
  const Outcome t = qcost({"cost", circuit("toffoli.tfc")});
  CHECK(t.code == cli::kExitOk);
  CHECK(t.out.find("quantum_cost: 5\n") != std::string::npos);
  CHECK(qcost({"cost", circuit("fredkin.tfc")}).out.find("quantum_cost: 5\n") != std::string::npos);
  CHECK(qcost({"cost", circuit("peres.tfc")}).out.find("quantum_cost: 4\n") != std::string::npos);
  CHECK(qcost({"cost", circuit("maslov_fa.tfc"), "--porcelain"}).out == "maslov_fa,4,6,2,1,12\n");
  CHECK(qcost({"cost", circuit("copy.tfc"), "--porcelain"}).out == "copy,1,1,0,1,2\n");
}

TEST_CASE("simulate", "[cli]") {
  CHECK(qcost({"simulate", circuit("copy.tfc"), "--input", "10"}).out == "11\n");
  CHECK(qcost({"simulate", circuit("copy.tfc"), "--input", "00"}).out == "00\n");
  CHECK(qcost({"simulate", circuit("toffoli.tfc"), "--input", "110"}).out == "111\n");
  const Outcome bad = qcost({"simulate", circuit("copy.tfc"), "--input", "11"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.rfind("qcost: ", 0) == 0);
}

TEST_CASE("optimize", "[cli]") {
  const Outcome r = qcost({"optimize", circuit("fredkin.tfc"), "--trace"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("initial_count: 7\n") != std::string::npos);
  CHECK(r.out.find("final_count: 5\n") != std::string::npos);
  CHECK(r.out.find(" moving @") != std::string::npos);
  CHECK(r.out.find("BEGIN\n") != std::string::npos);

  const fs::path out = scratch() / "fredkin_opt.tfc";
  CHECK(qcost({"optimize", circuit("fredkin.tfc"), "--emit", out.string()}).code == 0);
  const Circuit emitted = read_circuit_file(out);
  CHECK(emitted.library() == GateLibrary::NCV);
  CHECK(qcost({"cost", out.string()}).out.find("quantum_cost: 5\n") != std::string::npos);
}

TEST_CASE("multiplier round trip through files", "[cli]") {
  const fs::path out = scratch() / "m4.tfc";
  const Outcome gen =
      qcost({"gen-multiplier", "--n", "4", "--adder", "maslov", "--emit", out.string()});
  REQUIRE(gen.code == 0);
  CHECK(gen.out.find("quantum_cost: 144\n") != std::string::npos);
  CHECK(gen.out.find("total_cost: 220\n") != std::string::npos);

  const Outcome ok = qcost({"verify-multiplier", out.string(), "--n", "4", "--exhaustive"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.out == "PASS 256 pairs (exhaustive)\n");

  const Outcome sampled =
      qcost({"verify-multiplier", out.string(), "--n", "4", "--samples", "50", "--seed", "9"});
  CHECK(sampled.out == "PASS 50 pairs (sampled)\n");

  // Re-ingesting the emitted file gives the same report.
  const Outcome again = qcost({"cost", out.string()});
  CHECK(gen.out.find(again.out) != std::string::npos);

  // Drop the last gate: the check fails with exit code 1.
  Circuit c = read_circuit_file(out);
  std::vector<Gate> gates = c.gates();
  gates.pop_back();
  const fs::path broken = scratch() / "m4_broken.tfc";
  write_circuit_file(broken, c.with_gates(gates));
  const Outcome fail = qcost({"verify-multiplier", broken.string(), "--n", "4"});
  CHECK(fail.code == cli::kExitVerifyFailed);
  CHECK(fail.out.rfind("FAIL x=", 0) == 0);
}

TEST_CASE("adders and universality", "[cli]") {
  CHECK(qcost({"enumerate-adders", "--max-gates", "2"}).out == "0 full adders\n");
  const Outcome u = qcost({"universality", circuit("maslov_fa.tfc")});
  CHECK(u.out.rfind("true\nwitness: ", 0) == 0);
  CHECK(qcost({"universality", circuit("copy.tfc")}).out == "false\n");
}

TEST_CASE("compare", "[cli]") {
  const Outcome r = qcost({"compare", "--spec", circuit("compare_n4.json"), "--porcelain"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "maslov,56,144,20,28,220,true\na1,56,144,20,28,220,true\npfag,56,144,20,28,220,true\n");

  const fs::path spec = scratch() / "spec.json";
  std::ofstream(spec) << R"({"designs": [{"name": "file-n2", "file": "m2.tfc", "n": 2}]})";
  CHECK(qcost({"gen-multiplier", "--n", "2", "--emit", (scratch() / "m2.tfc").string()}).code == 0);
  CHECK(qcost({"compare", "--spec", spec.string(), "--porcelain"}).out ==
        "file-n2,8,28,2,6,38,true\n");

  std::ofstream(spec) << "{not json";
  CHECK(qcost({"compare", "--spec", spec.string()}).code == cli::kExitUsage);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(qcost({}).code == cli::kExitUsage);
  CHECK(qcost({"frobnicate"}).code == cli::kExitUsage);
  CHECK(qcost({"cost"}).code == cli::kExitUsage);
  CHECK(qcost({"cost", circuit("missing.tfc")}).code == cli::kExitUsage);
  CHECK(qcost({"enumerate-adders", "--max-gates", "9"}).code == cli::kExitUsage);
  CHECK(qcost({"verify-multiplier", circuit("toffoli.tfc"), "--n", "2", "--exhaustive",
               "--samples", "3"})
            .code == cli::kExitUsage);
  CHECK(qcost({"gen-multiplier", "--n", "4", "--adder", "nope"}).code == cli::kExitUsage);
  CHECK(qcost({"--help"}).code == cli::kExitOk);
}

TEST_CASE("output is deterministic", "[cli]") {
  const std::vector<std::string> args{"optimize", circuit("maslov_fa.tfc"), "--trace"};
  CHECK(qcost(args).out == qcost(args).out);
}

}  // namespace
}  // namespace qcost
