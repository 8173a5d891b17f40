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

#include "qcost/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "qcost/errors.hpp"

namespace qcost {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

struct SourceLine {
  std::size_t number;
  std::string_view text;
};

/// Non-blank lines with comments stripped.
std::vector<SourceLine> source_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    if (nl == std::string_view::npos) break;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t pos = s.find_first_of(seps, start);
    const std::string_view tok = trim(s.substr(start, pos - start));
    if (!tok.empty()) out.push_back(tok);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

/// First whitespace-delimited word and the remainder.
std::pair<std::string_view, std::string_view> head_tail(std::string_view line) {
  const std::size_t sp = line.find_first_of(" \t");
  if (sp == std::string_view::npos) return {line, {}};
  return {line.substr(0, sp), trim(line.substr(sp + 1))};
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

class NameTable {
 public:
  void declare(std::string_view name, std::size_t line_no) {
    if (!index_.emplace(std::string(name), names_.size()).second) {
      throw ParseError(line_no, "duplicate declaration of '" + std::string(name) + "'");
    }
    names_.emplace_back(name);
  }

  Line lookup(std::string_view name, std::size_t line_no) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      throw ParseError(line_no, "undeclared name '" + std::string(name) + "'");
    }
    return it->second;
  }

  std::size_t size() const { return names_.size(); }

 private:
  std::map<std::string, Line> index_;
  std::vector<std::string> names_;
};

Gate make_gate(std::string_view mnemonic, const std::vector<Line>& ls, std::size_t line_no) {
  const auto want = [&](std::size_t n) {
    if (ls.size() != n) {
      throw ParseError(line_no, "'" + std::string(mnemonic) + "' takes " +
                                    std::to_string(n) + " lines, got " +
                                    std::to_string(ls.size()));
    }
  };
  try {
    const std::string m = lower(mnemonic);
    if (m == "t1") { want(1); return Gate::not_gate(ls[0]); }
    if (m == "t2") { want(2); return Gate::cnot(ls[0], ls[1]); }
    if (m == "t3") { want(3); return Gate::toffoli(ls[0], ls[1], ls[2]); }
    if (m == "f2") { want(2); return Gate::swap(ls[0], ls[1]); }
    if (m == "f3") { want(3); return Gate::fredkin(ls[0], ls[1], ls[2]); }
    if (m == "p3") { want(3); return Gate::peres(ls[0], ls[1], ls[2]); }
    if (m == "v" || m == "v+") {
      const bool dag = m == "v+";
      if (ls.size() == 1) return dag ? Gate::v_dag(ls[0]) : Gate::v(ls[0]);
      want(2);
      return dag ? Gate::cv_dag(ls[0], ls[1]) : Gate::cv(ls[0], ls[1]);
    }
  } catch (const StructuralError& e) {
    throw ParseError(line_no, e.what());
  }
  throw ParseError(line_no, "unknown gate mnemonic '" + std::string(mnemonic) + "'");
}

/// Mnemonic and operand list shared by both dialects.
std::pair<std::string, std::vector<Line>> gate_tokens(const Gate& g) {
  switch (g.kind()) {
    case GateKind::NOT: return {"t1", g.lines()};
    case GateKind::CNOT: return {"t2", g.lines()};
    case GateKind::TOFFOLI: return {"t3", g.lines()};
    case GateKind::SWAP: return {"f2", g.lines()};
    case GateKind::FREDKIN: return {"f3", g.lines()};
    case GateKind::PERES: return {"p3", g.lines()};
    case GateKind::V:
    case GateKind::CV: return {"v", g.lines()};
    case GateKind::V_DAG:
    case GateKind::CV_DAG: return {"v+", g.lines()};
    case GateKind::FUSED: break;
  }
  throw EmitError("gate " + g.to_string() + " has no file representation");
}

std::string line_name(Line l) { return "l" + std::to_string(l); }

// ---------------------------------------------------------------- TFC

Circuit parse_tfc_block(const std::vector<SourceLine>& src, std::size_t& pos) {
  NameTable names;
  bool have_v = false;
  std::optional<std::vector<Line>> inputs, outputs, garbage;
  std::optional<std::vector<bool>> consts;
  std::size_t consts_line = 0, garbage_line = 0;
  std::map<std::string, bool> seen;

  const auto names_of = [&](std::string_view rest, std::size_t no) {
    std::vector<Line> out;
    for (std::string_view n : split(rest, ",")) out.push_back(names.lookup(n, no));
    return out;
  };

  // Header.
  for (;; ++pos) {
    if (pos >= src.size()) {
      throw ParseError(src.empty() ? 1 : src.back().number, "missing BEGIN");
    }
    const auto [word, rest] = head_tail(src[pos].text);
    const std::size_t no = src[pos].number;
    const std::string w = lower(word);
    if (w == "begin") {
      if (!have_v) throw ParseError(no, "BEGIN before .v");
      ++pos;
      break;
    }
    if (w.empty() || w[0] != '.') throw ParseError(no, "expected a header directive or BEGIN");
    if (!seen.emplace(w, true).second) throw ParseError(no, "repeated directive " + w);
    if (w == ".v") {
      for (std::string_view n : split(rest, ",")) names.declare(n, no);
      if (names.size() == 0) throw ParseError(no, ".v declares no lines");
      have_v = true;
      continue;
    }
    if (!have_v) throw ParseError(no, w + " before .v");
    if (w == ".i") {
      inputs = names_of(rest, no);
    } else if (w == ".o") {
      outputs = names_of(rest, no);
    } else if (w == ".g") {
      garbage = names_of(rest, no);
      garbage_line = no;
    } else if (w == ".c") {
      std::vector<bool> vals;
      for (std::string_view v : split(rest, ",")) {
        if (v == "0") vals.push_back(false);
        else if (v == "1") vals.push_back(true);
        else throw ParseError(no, "constant must be 0 or 1, got '" + std::string(v) + "'");
      }
      consts = std::move(vals);
      consts_line = no;
    } else {
      throw ParseError(no, "unknown directive " + std::string(word));
    }
  }

  const std::size_t n = names.size();
  std::vector<LineRole> roles(n, roles::pi);
  if (inputs) {
    std::vector<bool> is_input(n, false);
    for (Line l : *inputs) is_input[l] = true;
    std::size_t k = 0;
    for (Line l = 0; l < n; ++l) {
      if (is_input[l]) continue;
      bool one = false;
      if (consts) {
        if (k >= consts->size()) throw ParseError(consts_line, ".c lists too few constants");
        one = (*consts)[k];
      }
      roles[l].input = one ? InputRole::ConstantOne : InputRole::ConstantZero;
      ++k;
    }
    if (consts && k != consts->size()) {
      throw ParseError(consts_line, ".c lists too many constants");
    }
  } else if (consts && !consts->empty()) {
    throw ParseError(consts_line, ".c without .i");
  }
  if (outputs) {
    for (LineRole& r : roles) r.output = OutputRole::Garbage;
    for (Line l : *outputs) roles[l].output = OutputRole::PrimaryOutput;
  }
  if (garbage) {
    for (Line l : *garbage) {
      if (outputs && std::find(outputs->begin(), outputs->end(), l) != outputs->end()) {
        throw ParseError(garbage_line, "line listed in both .o and .g");
      }
      roles[l].output = OutputRole::Garbage;
    }
  }

  // Body.
  std::vector<Gate> gates;
  for (;; ++pos) {
    if (pos >= src.size()) {
      throw ParseError(src.empty() ? 1 : src.back().number, "missing END");
    }
    const auto [word, rest] = head_tail(src[pos].text);
    const std::size_t no = src[pos].number;
    if (lower(word) == "end") {
      ++pos;
      break;
    }
    std::vector<Line> ls;
    for (std::string_view name : split(rest, ",")) ls.push_back(names.lookup(name, no));
    gates.push_back(make_gate(word, ls, no));
  }
  return Circuit(n, std::move(roles), std::move(gates));
}

}  // namespace

Circuit parse_tfc(std::string_view text) {
  const std::vector<SourceLine> src = source_lines(text);
  std::size_t pos = 0;
  Circuit c = parse_tfc_block(src, pos);
  if (pos != src.size()) throw ParseError(src[pos].number, "content after END");
  return c;
}

std::vector<Circuit> parse_tfc_list(std::string_view text) {
  const std::vector<SourceLine> src = source_lines(text);
  std::vector<Circuit> out;
  std::size_t pos = 0;
  while (pos < src.size()) out.push_back(parse_tfc_block(src, pos));
  return out;
}

std::string emit_tfc(const Circuit& c) {
  const std::size_t n = c.n_lines();
  std::ostringstream os;
  const auto list = [&](auto pred) {
    std::string s;
    for (Line l = 0; l < n; ++l) {
      if (!pred(c.role(l))) continue;
      if (!s.empty()) s += ',';
      s += line_name(l);
    }
    return s;
  };
  const auto with_args = [](std::string directive, const std::string& args) {
    return args.empty() ? directive : directive + " " + args;
  };

  os << with_args(".v", list([](const LineRole&) { return true; })) << '\n';
  os << with_args(".i", list([](const LineRole& r) {
                    return r.input == InputRole::PrimaryInput;
                  }))
     << '\n';
  std::string consts;
  for (const LineRole& r : c.roles()) {
    if (r.input == InputRole::PrimaryInput) continue;
    if (!consts.empty()) consts += ',';
    consts += r.input == InputRole::ConstantOne ? '1' : '0';
  }
  if (!consts.empty()) os << ".c " << consts << '\n';
  os << with_args(".o", list([](const LineRole& r) {
                    return r.output == OutputRole::PrimaryOutput;
                  }))
     << '\n';
  const std::string garbage =
      list([](const LineRole& r) { return r.output == OutputRole::Garbage; });
  if (!garbage.empty()) os << ".g " << garbage << '\n';
  os << "BEGIN\n";
  for (const Gate& g : c.gates()) {
    const auto [mnemonic, ls] = gate_tokens(g);
    os << mnemonic << ' ';
    for (std::size_t i = 0; i < ls.size(); ++i) os << (i ? "," : "") << line_name(ls[i]);
    os << '\n';
  }
  os << "END\n";
  return os.str();
}

std::string emit_tfc_list(std::span<const Circuit> circuits) {
  std::string out;
  for (const Circuit& c : circuits) out += emit_tfc(c);
  return out;
}

// ---------------------------------------------------------------- .real

Circuit parse_real(std::string_view text) {
  const std::vector<SourceLine> src = source_lines(text);
  NameTable names;
  std::optional<std::size_t> numvars;
  std::optional<std::string> constants, garbage;
  std::map<std::string, bool> seen;
  std::size_t pos = 0;
  bool have_variables = false;

  const auto check_count = [&](std::size_t got, std::size_t no, const char* what) {
    if (!numvars) throw ParseError(no, std::string(what) + " before .numvars");
    if (got != *numvars) {
      throw ParseError(no, std::string(what) + " lists " + std::to_string(got) +
                               " entries, expected " + std::to_string(*numvars));
    }
  };

  for (;; ++pos) {
    if (pos >= src.size()) {
      throw ParseError(src.empty() ? 1 : src.back().number, "missing .begin");
    }
    const auto [word, rest] = head_tail(src[pos].text);
    const std::size_t no = src[pos].number;
    const std::string w = lower(word);
    if (w == ".begin") {
      if (!have_variables) throw ParseError(no, ".begin before .variables");
      ++pos;
      break;
    }
    if (w.empty() || w[0] != '.') throw ParseError(no, "expected a header directive or .begin");
    if (!seen.emplace(w, true).second) throw ParseError(no, "repeated directive " + w);
    if (w == ".version" || w == ".model") continue;
    if (w == ".numvars") {
      const std::string s(rest);
      if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
        throw ParseError(no, ".numvars needs a positive integer");
      }
      const std::size_t k = std::stoul(s);
      if (k == 0) throw ParseError(no, ".numvars needs a positive integer");
      numvars = k;
    } else if (w == ".variables") {
      const auto toks = split(rest, " \t");
      check_count(toks.size(), no, ".variables");
      for (std::string_view t : toks) names.declare(t, no);
      have_variables = true;
    } else if (w == ".inputs" || w == ".outputs") {
      check_count(split(rest, " \t").size(), no, w.c_str());
    } else if (w == ".constants") {
      constants = std::string(rest);
      check_count(constants->size(), no, ".constants");
      for (char ch : *constants) {
        if (ch != '0' && ch != '1' && ch != '-') {
          throw ParseError(no, ".constants may contain only 0, 1 and -");
        }
      }
    } else if (w == ".garbage") {
      garbage = std::string(rest);
      check_count(garbage->size(), no, ".garbage");
      for (char ch : *garbage) {
        if (ch != '1' && ch != '-') throw ParseError(no, ".garbage may contain only 1 and -");
      }
    } else {
      throw ParseError(no, "unknown directive " + std::string(word));
    }
  }

  const std::size_t n = names.size();
  std::vector<LineRole> roles(n, roles::pi);
  for (Line l = 0; l < n; ++l) {
    if (constants && (*constants)[l] == '0') roles[l].input = InputRole::ConstantZero;
    if (constants && (*constants)[l] == '1') roles[l].input = InputRole::ConstantOne;
    if (garbage && (*garbage)[l] == '1') roles[l].output = OutputRole::Garbage;
  }

  std::vector<Gate> gates;
  for (;; ++pos) {
    if (pos >= src.size()) {
      throw ParseError(src.empty() ? 1 : src.back().number, "missing .end");
    }
    const auto [word, rest] = head_tail(src[pos].text);
    const std::size_t no = src[pos].number;
    if (lower(word) == ".end") {
      ++pos;
      break;
    }
    std::vector<Line> ls;
    for (std::string_view name : split(rest, " \t")) ls.push_back(names.lookup(name, no));
    gates.push_back(make_gate(word, ls, no));
  }
  if (pos != src.size()) throw ParseError(src[pos].number, "content after .end");
  return Circuit(n, std::move(roles), std::move(gates));
}

std::string emit_real(const Circuit& c) {
  const std::size_t n = c.n_lines();
  std::ostringstream os;
  std::string vars;
  for (Line l = 0; l < n; ++l) vars += (l ? " " : "") + line_name(l);
  std::string constants, garbage;
  for (const LineRole& r : c.roles()) {
    constants += r.input == InputRole::ConstantZero  ? '0'
                 : r.input == InputRole::ConstantOne ? '1'
                                                     : '-';
    garbage += r.output == OutputRole::Garbage ? '1' : '-';
  }
  os << ".version 1.0\n"
     << ".numvars " << n << '\n'
     << ".variables " << vars << '\n'
     << ".inputs " << vars << '\n'
     << ".outputs " << vars << '\n'
     << ".constants " << constants << '\n'
     << ".garbage " << garbage << '\n'
     << ".begin\n";
  for (const Gate& g : c.gates()) {
    const auto [mnemonic, ls] = gate_tokens(g);
    os << mnemonic;
    for (Line l : ls) os << ' ' << line_name(l);
    os << '\n';
  }
  os << ".end\n";
  return os.str();
}

// ---------------------------------------------------------------- files

Dialect detect_dialect(const std::filesystem::path& path, std::string_view text) {
  const std::string ext = lower(path.extension().string());
  if (ext == ".tfc") return Dialect::TFC;
  if (ext == ".real") return Dialect::REAL;
  for (const SourceLine& l : source_lines(text)) {
    const std::string w = lower(head_tail(l.text).first);
    if (w == ".version" || w == ".numvars" || w == ".variables") return Dialect::REAL;
    return Dialect::TFC;
  }
  return Dialect::TFC;
}

Circuit parse_circuit(std::string_view text, Dialect dialect) {
  return dialect == Dialect::TFC ? parse_tfc(text) : parse_real(text);
}

std::string emit_circuit(const Circuit& c, Dialect dialect) {
  return dialect == Dialect::TFC ? emit_tfc(c) : emit_real(c);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Circuit read_circuit_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  return parse_circuit(text, detect_dialect(path, text));
}

void write_circuit_file(const std::filesystem::path& path, const Circuit& c) {
  const Dialect d = lower(path.extension().string()) == ".real" ? Dialect::REAL : Dialect::TFC;
  const std::string text = emit_circuit(c, d);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace qcost
