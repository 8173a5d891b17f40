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

#include "qcost/templates.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "qcost/errors.hpp"
#include "qcost/io.hpp"
#include "qcost/semantics.hpp"

namespace qcost {

Template Template::from_circuit(Circuit c) {
  bool identity = false;
  const bool classical = std::all_of(c.gates().begin(), c.gates().end(),
                                     [](const Gate& g) { return is_classical(g.kind()); });
  if (classical) {
    identity = permutation_of(c).is_identity();
  } else {
    identity = unitary_of(c).is_identity();
  }
  if (!identity) throw PreconditionError("template does not compose to the identity");
  if (c.empty()) throw PreconditionError("template is empty");
  return Template(std::move(c));
}

void TemplateLibrary::append(const TemplateLibrary& other) {
  templates_.insert(templates_.end(), other.templates_.begin(), other.templates_.end());
}

namespace {

struct UnitaryHash {
  std::size_t operator()(const ExactUnitary& u) const {
    std::size_t h = u.dim();
    for (std::size_t i = 0; i < u.dim(); ++i) {
      for (std::size_t j = 0; j < u.dim(); ++j) {
        h = h * 1000003u ^ std::hash<DyadicGaussian>{}(u(i, j));
      }
    }
    return h;
  }
};

using Code = std::vector<int>;

class Alphabet {
 public:
  explicit Alphabet(std::size_t k) : k_(k) {
    for (Line t = 0; t < k; ++t) gates_.push_back(Gate::not_gate(t));
    for (GateKind kind : {GateKind::CNOT, GateKind::CV, GateKind::CV_DAG}) {
      for (Line c = 0; c < k; ++c) {
        for (Line t = 0; t < k; ++t) {
          if (c != t) gates_.emplace_back(kind, std::vector<Line>{c}, std::vector<Line>{t});
        }
      }
    }
    for (const Gate& g : gates_) {
      ExactUnitary u(k);
      u.apply(g);
      unitaries_.push_back(std::move(u));
    }
  }

  std::size_t size() const { return gates_.size(); }
  const Gate& gate(int i) const { return gates_[i]; }
  std::size_t lines() const { return k_; }

  int index_of(const Gate& g) const {
    const auto it = std::find(gates_.begin(), gates_.end(), g);
    return static_cast<int>(it - gates_.begin());
  }

  int inverse_of(int i) const { return index_of(gates_[i].inverse().front()); }

  int relabeled(int i, const std::vector<Line>& perm) const {
    return index_of(gates_[i].remapped(perm));
  }

  ExactUnitary product(const Code& seq) const {
    ExactUnitary u(k_);
    for (int i : seq) u.apply(gates_[i]);
    return u;
  }

 private:
  std::size_t k_;
  std::vector<Gate> gates_;
  std::vector<ExactUnitary> unitaries_;
};

/// All length-`len` codes, lexicographic.
std::vector<Code> all_codes(std::size_t alphabet, std::size_t len) {
  std::vector<Code> out{{}};
  for (std::size_t step = 0; step < len; ++step) {
    std::vector<Code> next;
    next.reserve(out.size() * alphabet);
    for (const Code& c : out) {
      for (std::size_t a = 0; a < alphabet; ++a) {
        Code d = c;
        d.push_back(static_cast<int>(a));
        next.push_back(std::move(d));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool has_identity_factor(const Alphabet& alpha, const Code& seq) {
  const std::size_t s = seq.size();
  for (std::size_t len = 2; len < s; ++len) {
    for (std::size_t start = 0; start < s; ++start) {
      Code sub;
      for (std::size_t i = 0; i < len; ++i) sub.push_back(seq[(start + i) % s]);
      if (alpha.product(sub).is_identity()) return true;
    }
  }
  return false;
}

Code canonical_form(const Alphabet& alpha, const Code& seq,
                    const std::vector<std::vector<Line>>& perms) {
  Code inv;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) inv.push_back(alpha.inverse_of(*it));
  Code best;
  const Code* bases[] = {&seq, &inv};
  for (const Code* base : bases) {
    for (std::size_t r = 0; r < base->size(); ++r) {
      Code rot(base->begin() + static_cast<std::ptrdiff_t>(r), base->end());
      rot.insert(rot.end(), base->begin(), base->begin() + static_cast<std::ptrdiff_t>(r));
      for (const auto& perm : perms) {
        Code form;
        form.reserve(rot.size());
        for (int g : rot) form.push_back(alpha.relabeled(g, perm));
        if (best.empty() || form < best) best = std::move(form);
      }
    }
  }
  return best;
}

Circuit compact(const Alphabet& alpha, const Code& code) {
  std::vector<Line> order;
  for (int i : code) {
    for (Line l : alpha.gate(i).lines()) {
      if (std::find(order.begin(), order.end(), l) == order.end()) order.push_back(l);
    }
  }
  std::vector<Line> mapping(alpha.lines(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) mapping[order[i]] = i;
  std::vector<Gate> gates;
  for (int i : code) gates.push_back(alpha.gate(i).remapped(mapping));
  return Circuit(order.size(), std::vector<LineRole>(order.size(), roles::pi),
                 std::move(gates));
}

}  // namespace

std::vector<Circuit> enumerate_identity_templates(std::size_t max_lines,
                                                  std::size_t max_size) {
  if (max_lines == 0 || max_lines > 4 || max_size > 8) {
    throw ResourceError("template enumeration bound exceeded");
  }
  const Alphabet alpha(max_lines);
  std::vector<std::vector<Line>> perms;
  std::vector<Line> perm(max_lines);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  // Products of every code up to half the maximum length, keyed by unitary.
  const std::size_t half_max = (max_size + 1) / 2;
  std::vector<std::vector<Code>> codes(half_max + 1);
  std::vector<std::unordered_map<ExactUnitary, std::vector<std::size_t>, UnitaryHash>> by_unitary(
      half_max + 1);
  std::vector<std::vector<ExactUnitary>> products(half_max + 1);
  for (std::size_t len = 1; len <= half_max; ++len) {
    codes[len] = all_codes(alpha.size(), len);
    for (std::size_t i = 0; i < codes[len].size(); ++i) {
      ExactUnitary u = alpha.product(codes[len][i]);
      by_unitary[len][u].push_back(i);
      products[len].push_back(std::move(u));
    }
  }

  std::set<std::pair<std::size_t, Code>> found;
  for (std::size_t s = 2; s <= max_size; ++s) {
    const std::size_t tail = s / 2;
    const std::size_t head = s - tail;
    for (std::size_t i = 0; i < codes[head].size(); ++i) {
      // head then tail is the identity iff U(tail) = U(head)^-1.
      const auto it = by_unitary[tail].find(products[head][i].adjoint());
      if (it == by_unitary[tail].end()) continue;
      for (std::size_t j : it->second) {
        Code seq = codes[head][i];
        seq.insert(seq.end(), codes[tail][j].begin(), codes[tail][j].end());
        if (has_identity_factor(alpha, seq)) continue;
        found.emplace(s, canonical_form(alpha, seq, perms));
      }
    }
  }

  std::vector<Circuit> out;
  out.reserve(found.size());
  for (const auto& [size, code] : found) out.push_back(compact(alpha, code));
  return out;
}

Circuit fredkin_template() {
  // Lines a=0, b=1, c=2.
  std::vector<Gate> gates = {
      Gate::toffoli(0, 2, 1), Gate::toffoli(0, 1, 2), Gate::toffoli(0, 2, 1),
      Gate::cnot(2, 1),       Gate::toffoli(0, 1, 2), Gate::cnot(2, 1),
  };
  return Circuit(3, std::vector<LineRole>(3, roles::pi), std::move(gates));
}

TemplateLibrary parse_template_library(std::string_view tfc_text) {
  TemplateLibrary lib;
  for (Circuit& c : parse_tfc_list(tfc_text)) lib.add(Template::from_circuit(std::move(c)));
  return lib;
}

TemplateLibrary load_template_library(const std::filesystem::path& path) {
  return parse_template_library(read_text_file(path));
}

}  // namespace qcost
