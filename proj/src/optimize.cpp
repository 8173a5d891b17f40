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

#include "qcost/optimize.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "qcost/decompose.hpp"
#include "qcost/errors.hpp"
#include "qcost/semantics.hpp"

namespace qcost {

std::size_t OptimizeTrace::count(const std::string& rule) const {
  return static_cast<std::size_t>(std::count_if(
      steps.begin(), steps.end(), [&](const TraceStep& s) { return s.rule == rule; }));
}

namespace {

constexpr Line kUnbound = std::numeric_limits<Line>::max();

// Relative encoding of a gate run: kinds plus lines numbered by first
// appearance. Equal keys mean equal local behaviour.
void append_key(const Gate& g, std::vector<Line>& order, std::string& key) {
  key += static_cast<char>('A' + static_cast<int>(g.kind()));
  if (g.kind() == GateKind::FUSED) {
    key += '[';
    for (const Gate& part : g.body()) append_key(part, order, key);
    key += ']';
    return;
  }
  for (Line l : g.lines()) {
    auto it = std::find(order.begin(), order.end(), l);
    if (it == order.end()) {
      order.push_back(l);
      it = order.end() - 1;
    }
    key += static_cast<char>('0' + (it - order.begin()));
  }
}

std::string pair_key(const Gate& a, const Gate& b, std::vector<Line>& order) {
  std::string key;
  append_key(a, order, key);
  key += '|';
  append_key(b, order, key);
  return key;
}

enum class PairClass : std::uint8_t { Cancel, Merge, Fuse, None };

struct Reduction {
  PairClass cls = PairClass::None;
  std::vector<Gate> replacement;
};

std::vector<Gate> named_candidates(std::size_t k) {
  std::vector<Gate> out;
  for (Line l = 0; l < k; ++l) {
    out.push_back(Gate::not_gate(l));
    out.push_back(Gate::v(l));
    out.push_back(Gate::v_dag(l));
  }
  if (k == 2) {
    for (auto [c, t] : {std::pair<Line, Line>{0, 1}, {1, 0}}) {
      out.push_back(Gate::cnot(c, t));
      out.push_back(Gate::cv(c, t));
      out.push_back(Gate::cv_dag(c, t));
    }
    out.push_back(Gate::swap(0, 1));
  }
  return out;
}

struct CachedReduction {
  PairClass cls = PairClass::None;
  std::optional<Gate> named;  // on local lines
};

// Results depend only on relative line patterns, so one cache serves every
// circuit.
struct RewriteCache {
  std::unordered_map<std::string, CachedReduction> reduce;
  std::unordered_map<std::string, bool> commute;
};

RewriteCache& cache() {
  thread_local RewriteCache c;
  return c;
}

Reduction reduce_pair(const Gate& a, const Gate& b) {
  std::vector<Line> order;
  const std::string key = pair_key(a, b, order);
  if (order.size() > 2) return {};
  auto& entries = cache().reduce;
  auto it = entries.find(key);
  if (it == entries.end()) {
    std::vector<Line> mapping(std::max(a.max_line(), b.max_line()) + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i) mapping[order[i]] = i;
    const Gate local[] = {a.remapped(mapping), b.remapped(mapping)};
    const ExactUnitary u = unitary_of_gates(local, order.size());
    CachedReduction entry;
    if (u.is_identity()) {
      entry.cls = PairClass::Cancel;
    } else {
      entry.cls = PairClass::Fuse;
      for (const Gate& cand : named_candidates(order.size())) {
        const Gate one[] = {cand};
        if (unitary_of_gates(one, order.size()) == u) {
          entry.cls = PairClass::Merge;
          entry.named = cand;
          break;
        }
      }
    }
    it = entries.emplace(key, std::move(entry)).first;
  }
  Reduction r;
  r.cls = it->second.cls;
  if (r.cls == PairClass::Merge) {
    r.replacement.push_back(it->second.named->remapped(order));
  } else if (r.cls == PairClass::Fuse) {
    const Gate body[] = {a, b};
    r.replacement.push_back(Gate::fused(body));
  }
  return r;
}

bool commutes(const Gate& a, const Gate& b) {
  bool shared = false;
  for (Line l : a.lines()) shared = shared || b.touches(l);
  if (!shared) return true;
  std::vector<Line> order;
  const std::string key = pair_key(a, b, order);
  auto& entries = cache().commute;
  auto it = entries.find(key);
  if (it == entries.end()) {
    const std::size_t n = std::max(a.max_line(), b.max_line()) + 1;
    it = entries.emplace(key, commute(a, b, n)).first;
  }
  return it->second;
}

// A gate's lines (controls then targets) in every order that describes the
// same gate. Fixed storage: this sits on the template-matching hot path.
struct LineOrderings {
  std::array<std::array<Line, 3>, 2> orders{};
  std::size_t count = 0;
  std::size_t size = 0;
};

LineOrderings line_orderings(const Gate& g) {
  LineOrderings o;
  std::array<Line, 3>& first = o.orders[0];
  for (Line l : g.controls()) first[o.size++] = l;
  for (Line l : g.targets()) first[o.size++] = l;
  o.count = 1;
  std::size_t a = 0, b = 0;
  switch (g.kind()) {
    case GateKind::TOFFOLI:
    case GateKind::SWAP:
      a = 0, b = 1;
      break;
    case GateKind::FREDKIN:
      a = 1, b = 2;
      break;
    default:
      return o;
  }
  o.orders[1] = first;
  std::swap(o.orders[1][a], o.orders[1][b]);
  o.count = 2;
  return o;
}

std::size_t weight(std::span<const Gate> gates) {
  std::size_t w = 0;
  for (const Gate& g : gates) w += primitive_weight(g);
  return w;
}

struct Variant {
  Variant(std::vector<Gate> g, std::size_t lines, std::size_t t)
      : gates(std::move(g)), n_lines(lines), order(t) {
    const std::size_t n = gates.size();
    std::vector<bool> seen(n_lines, false);
    std::vector<std::size_t> last_use(n_lines, 0);
    for (std::size_t k = 0; k < n; ++k) {
      gate_lines.push_back(gates[k].lines());
      for (Line l : gate_lines.back()) last_use[l] = k;
    }
    // covered[m]: every line of gates m.. already appears in gates 0..m-1.
    covered.assign(n + 1, false);
    for (std::size_t m = 1; m <= n; ++m) {
      for (Line l : gate_lines[m - 1]) seen[l] = true;
      bool all = true;
      for (std::size_t k = m; k < n && all; ++k)
        for (Line l : gate_lines[k]) all = all && seen[l];
      covered[m] = all;
    }
    rest_weight.assign(n + 1, 0);
    rest_inverse.resize(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
      const std::span<const Gate> rest(gates.begin() + static_cast<std::ptrdiff_t>(m), gates.end());
      rest_weight[m] = weight(rest);
      rest_inverse[m] = inverse_sequence(rest);
    }
  }

  std::vector<Gate> gates;
  std::size_t n_lines = 0;
  std::size_t order = 0;
  std::vector<std::vector<Line>> gate_lines;
  std::vector<bool> covered;
  std::vector<std::size_t> rest_weight;
  std::vector<std::vector<Gate>> rest_inverse;
};

// Every rotation of every template and of its inverse, grouped by the kind
// of the first gate.
class TemplateIndex {
 public:
  explicit TemplateIndex(const TemplateLibrary& lib) {
    for (std::size_t t = 0; t < lib.size(); ++t) {
      const Template& tmpl = lib.templates()[t];
      const std::vector<Gate> inv = inverse_sequence(tmpl.gates());
      std::vector<std::vector<Gate>> seen;
      const std::vector<Gate>* bases[] = {&tmpl.gates(), &inv};
      for (const std::vector<Gate>* base : bases) {
        for (std::size_t r = 0; r < base->size(); ++r) {
          std::vector<Gate> rot(base->begin() + static_cast<std::ptrdiff_t>(r), base->end());
          rot.insert(rot.end(), base->begin(), base->begin() + static_cast<std::ptrdiff_t>(r));
          if (std::find(seen.begin(), seen.end(), rot) != seen.end()) continue;
          seen.push_back(rot);
          const auto kind = static_cast<std::size_t>(rot.front().kind());
          by_kind_[kind].emplace_back(std::move(rot), tmpl.n_lines(), t);
        }
      }
    }
  }

  const std::vector<Variant>& starting_with(GateKind kind) const {
    return by_kind_[static_cast<std::size_t>(kind)];
  }

 private:
  std::array<std::vector<Variant>, static_cast<std::size_t>(GateKind::FUSED) + 1> by_kind_;
};

const TemplateIndex& builtin_index() {
  static const TemplateIndex index(builtin_templates());
  return index;
}

struct TemplateMatch {
  std::size_t length = 0;
  std::size_t gain = 0;
  std::size_t order = 0;
  std::vector<Gate> replacement;
};

class Rewriter {
 public:
  Rewriter(std::vector<Gate> gates, std::vector<TraceStep>* trace)
      : gates_(std::move(gates)), trace_(trace) {}

  std::vector<Gate> take() { return std::move(gates_); }

  bool deletion() {
    bool changed = false;
    std::size_t i = 0;
    while (i + 1 < gates_.size()) {
      Reduction r = reduce_pair(gates_[i], gates_[i + 1]);
      if (r.cls == PairClass::None) {
        ++i;
        continue;
      }
      replace(i, 2, std::move(r.replacement), "deletion");
      changed = true;
      if (i > 0) --i;
    }
    return changed;
  }

  bool moving(std::size_t window) {
    struct Candidate {
      std::size_t i, j;
      PairClass cls;
    };
    std::vector<Candidate> candidates;
    const std::size_t n = gates_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 2; j < n && j <= i + window; ++j) {
        const PairClass cls = reduce_pair(gates_[i], gates_[j]).cls;
        if (cls != PairClass::None) candidates.push_back({i, j, cls});
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return x.cls < y.cls; });
    for (const Candidate& cand : candidates) {
      if (auto target = plan_move(cand.i, cand.j)) {
        perform_move(cand.i, *target);
        return true;
      }
    }
    return false;
  }

  bool templates(const TemplateIndex& index) {
    for (std::size_t p = 0; p < gates_.size(); ++p) {
      if (gates_[p].kind() == GateKind::FUSED) continue;
      std::optional<TemplateMatch> best;
      for (const Variant& v : index.starting_with(gates_[p].kind())) {
        std::vector<Line> bind(v.n_lines, kUnbound);
        match(v, p, 0, bind, best);
      }
      if (best) {
        replace(p, best->length, std::move(best->replacement), "template");
        return true;
      }
    }
    return false;
  }

 private:
  void replace(std::size_t pos, std::size_t len, std::vector<Gate> after, const char* rule) {
    const auto first = gates_.begin() + static_cast<std::ptrdiff_t>(pos);
    const auto last = first + static_cast<std::ptrdiff_t>(len);
    if (trace_) trace_->push_back(TraceStep{rule, pos, {first, last}, after});
    const auto at = gates_.erase(first, last);
    gates_.insert(at, after.begin(), after.end());
  }

  // Target order of positions i..j: gates that can pass gate i go left,
  // gates that can pass gate j go right, and i, j end up adjacent.
  std::optional<std::vector<std::size_t>> plan_move(std::size_t i, std::size_t j) {
    std::vector<std::size_t> left, right;
    for (std::size_t k = i + 1; k < j; ++k) {
      bool to_left = commutes(gates_[k], gates_[i]);
      for (std::size_t r : right) {
        if (!to_left) break;
        to_left = commutes(gates_[r], gates_[k]);
      }
      if (to_left) {
        left.push_back(k);
      } else if (commutes(gates_[k], gates_[j])) {
        right.push_back(k);
      } else {
        return std::nullopt;
      }
    }
    std::vector<std::size_t> target = left;
    target.push_back(i);
    target.push_back(j);
    target.insert(target.end(), right.begin(), right.end());
    return target;
  }

  void perform_move(std::size_t i, const std::vector<std::size_t>& target) {
    std::vector<std::size_t> current(target.size());
    for (std::size_t k = 0; k < current.size(); ++k) current[k] = i + k;
    for (std::size_t t = 0; t < target.size(); ++t) {
      std::size_t q = static_cast<std::size_t>(
          std::find(current.begin(), current.end(), target[t]) - current.begin());
      for (; q > t; --q) {
        const std::size_t pos = i + q - 1;
        if (!commutes(gates_[pos], gates_[pos + 1])) {
          throw std::logic_error("moving rule tried to swap non-commuting gates");
        }
        replace(pos, 2, {gates_[pos + 1], gates_[pos]}, "moving");
        std::swap(current[q - 1], current[q]);
      }
    }
  }

  void match(const Variant& v, std::size_t p, std::size_t m, std::vector<Line>& bind,
             std::optional<TemplateMatch>& best) {
    if (m > 0) consider(v, p, m, bind, best);
    if (m == v.gates.size() || p + m >= gates_.size()) return;
    const Gate& g = gates_[p + m];
    if (v.gates[m].kind() != g.kind() || g.kind() == GateKind::FUSED) return;
    const std::vector<Line>& tl = v.gate_lines[m];
    const LineOrderings orderings = line_orderings(g);
    for (std::size_t o = 0; o < orderings.count; ++o) {
      const std::array<Line, 3>& gl = orderings.orders[o];
      std::array<Line, 3> fresh{};
      std::size_t n_fresh = 0;
      bool ok = true;
      for (std::size_t k = 0; k < tl.size() && ok; ++k) {
        if (bind[tl[k]] == kUnbound) {
          ok = std::find(bind.begin(), bind.end(), gl[k]) == bind.end();
          bind[tl[k]] = gl[k];
          fresh[n_fresh++] = tl[k];
        } else {
          ok = bind[tl[k]] == gl[k];
        }
      }
      if (ok) match(v, p, m + 1, bind, best);
      for (std::size_t k = 0; k < n_fresh; ++k) bind[fresh[k]] = kUnbound;
    }
  }

  void consider(const Variant& v, std::size_t p, std::size_t m, const std::vector<Line>& bind,
                std::optional<TemplateMatch>& best) {
    if (!v.covered[m]) return;
    const std::size_t before = weight({gates_.begin() + static_cast<std::ptrdiff_t>(p), m});
    const std::size_t after = v.rest_weight[m];
    if (after >= before) return;
    const std::size_t gain = before - after;
    if (best && (best->length > m || (best->length == m && best->gain >= gain))) return;
    std::vector<Gate> replacement;
    for (const Gate& g : v.rest_inverse[m]) replacement.push_back(g.remapped(bind));
    best = TemplateMatch{m, gain, v.order, std::move(replacement)};
  }

  std::vector<Gate> gates_;
  std::vector<TraceStep>* trace_;
};

void require_primitives(const Circuit& c) {
  for (const Gate& g : c.gates()) {
    if (!is_primitive(g.kind())) {
      throw PreconditionError("rule needs primitive gates, found " + g.to_string());
    }
  }
}

std::vector<Gate> run_fixpoint(std::vector<Gate> gates, const OptimizeOptions& options,
                               const TemplateIndex* index, std::vector<TraceStep>* trace) {
  Rewriter rw(std::move(gates), trace);
  for (;;) {
    rw.deletion();
    if (rw.moving(options.window)) continue;
    if (index && rw.templates(*index)) continue;
    break;
  }
  return rw.take();
}

struct Route {
  std::vector<Gate> gates;
  std::vector<TraceStep> steps;
  std::size_t lowered = 0;
};

// Expands FREDKIN, PERES and SWAP, leaving Toffolis and primitives.
Route expand_macros(const Circuit& c) {
  Route r;
  for (const Gate& g : c.gates()) {
    std::vector<Gate> expansion;
    switch (g.kind()) {
      case GateKind::FREDKIN: expansion = decompose_fredkin(g); break;
      case GateKind::PERES: expansion = decompose_peres(g); break;
      case GateKind::SWAP: expansion = decompose_swap(g); break;
      default: expansion = {g}; break;
    }
    if (expansion.size() != 1) {
      r.steps.push_back(TraceStep{"decompose", r.gates.size(), {g}, expansion});
    }
    r.gates.insert(r.gates.end(), expansion.begin(), expansion.end());
  }
  return r;
}

enum class Lowering { Default, Mirrored, Chosen };

// Exact five-gate expansions of a Toffoli: both control orders, each either
// direct or mirrored (the inverse of the expansion, the gate being
// self-inverse).
std::array<std::vector<Gate>, 4> toffoli_expansions(const Gate& g) {
  const Gate swapped = Gate::toffoli(g.controls()[1], g.controls()[0], g.targets()[0]);
  std::vector<Gate> direct = decompose_toffoli(g);
  std::vector<Gate> other = decompose_toffoli(swapped);
  std::vector<Gate> mirrored = inverse_sequence(direct);
  std::vector<Gate> other_mirrored = inverse_sequence(other);
  return {std::move(direct), std::move(other), std::move(mirrored), std::move(other_mirrored)};
}

// Lowers each Toffoli. In Chosen mode the expansion is the one that
// optimizes best together with the gates just before it and the primitives
// up to the next Toffoli.
void lower_toffolis(std::vector<Gate>& gates, Lowering mode, const OptimizeOptions& options,
                    const TemplateIndex* index, std::vector<TraceStep>& steps) {
  const std::size_t context = 2 * options.window;
  std::vector<Gate> out;
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const Gate& g = gates[k];
    if (g.kind() != GateKind::TOFFOLI) {
      out.push_back(g);
      continue;
    }
    const auto expansions = toffoli_expansions(g);
    std::size_t choice = mode == Lowering::Mirrored ? 2 : 0;
    if (mode == Lowering::Chosen) {
      std::vector<Gate> ahead;
      for (std::size_t a = k + 1; a < gates.size() && ahead.size() < context; ++a) {
        if (gates[a].kind() == GateKind::TOFFOLI) break;
        ahead.push_back(gates[a]);
      }
      const std::size_t from = out.size() > context ? out.size() - context : 0;
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (std::size_t v = 0; v < expansions.size(); ++v) {
        std::vector<Gate> segment(out.begin() + static_cast<std::ptrdiff_t>(from), out.end());
        segment.insert(segment.end(), expansions[v].begin(), expansions[v].end());
        segment.insert(segment.end(), ahead.begin(), ahead.end());
        const std::size_t size = run_fixpoint(std::move(segment), options, index, nullptr).size();
        if (size < best) {
          best = size;
          choice = v;
        }
      }
    }
    steps.push_back(TraceStep{"decompose", out.size(), {g}, expansions[choice]});
    out.insert(out.end(), expansions[choice].begin(), expansions[choice].end());
  }
  gates = std::move(out);
}

// Backward routes optimize the reversed circuit and map each step back onto
// the forward gate order.
Route run_route(const Route& expanded, Lowering mode, bool backward,
                const OptimizeOptions& options, const TemplateIndex* index) {
  Route r = expanded;
  if (!backward) {
    lower_toffolis(r.gates, mode, options, index, r.steps);
    r.lowered = r.gates.size();
    r.gates = run_fixpoint(std::move(r.gates), options, index, &r.steps);
    return r;
  }
  std::vector<TraceStep> inner;
  std::vector<Gate> reversed = inverse_sequence(r.gates);
  std::size_t len = reversed.size();
  lower_toffolis(reversed, mode, options, index, inner);
  r.lowered = reversed.size();
  std::vector<Gate> out = run_fixpoint(std::move(reversed), options, index, &inner);
  for (TraceStep& s : inner) {
    const std::size_t pos = len - s.position - s.before.size();
    len = len - s.before.size() + s.after.size();
    r.steps.push_back(
        TraceStep{s.rule, pos, inverse_sequence(s.before), inverse_sequence(s.after)});
  }
  r.gates = inverse_sequence(out);
  return r;
}

}  // namespace

std::pair<Circuit, bool> apply_deletion(const Circuit& c, std::vector<TraceStep>* trace) {
  require_primitives(c);
  Rewriter rw(c.gates(), trace);
  const bool changed = rw.deletion();
  return {c.with_gates(rw.take()), changed};
}

std::pair<Circuit, bool> apply_moving(const Circuit& c, std::size_t window,
                                      std::vector<TraceStep>* trace) {
  require_primitives(c);
  Rewriter rw(c.gates(), trace);
  const bool changed = rw.moving(window);
  return {c.with_gates(rw.take()), changed};
}

std::pair<Circuit, bool> apply_templates(const Circuit& c, const TemplateLibrary& lib,
                                         std::vector<TraceStep>* trace) {
  const TemplateIndex index(lib);
  Rewriter rw(c.gates(), trace);
  const bool changed = rw.templates(index);
  return {c.with_gates(rw.take()), changed};
}

OptimizeResult optimize_with_trace(const Circuit& c, const OptimizeOptions& options) {
  std::optional<TemplateIndex> custom;
  const TemplateIndex* index = nullptr;
  if (options.use_templates) {
    if (options.templates) {
      custom.emplace(*options.templates);
      index = &*custom;
    } else {
      index = &builtin_index();
    }
  }

  const Route expanded = expand_macros(c);
  std::optional<Route> best;
  for (Lowering mode : {Lowering::Default, Lowering::Mirrored, Lowering::Chosen}) {
    if (mode == Lowering::Mirrored && !options.both_directions) continue;
    if (mode == Lowering::Chosen && !options.choose_lowering) continue;
    for (bool backward : {false, true}) {
      if (backward && !options.both_directions) continue;
      Route r = run_route(expanded, mode, backward, options, index);
      if (!best || r.gates.size() < best->gates.size()) best = std::move(r);
    }
  }

  Circuit out = c.with_gates(std::move(best->gates));
  if (c.n_lines() <= options.verify_lines && unitary_of(out) != unitary_of(c)) {
    throw std::logic_error("optimized circuit is not equivalent to its input");
  }
  OptimizeTrace trace{std::move(best->steps), best->lowered, out.size()};
  return {std::move(out), std::move(trace)};
}

std::size_t quantum_cost(const Circuit& c, const OptimizeOptions& options) {
  return optimize_with_trace(c, options).circuit.size();
}

Circuit replay(const Circuit& input, const OptimizeTrace& trace) {
  std::vector<Gate> gates = input.gates();
  for (const TraceStep& s : trace.steps) {
    const std::size_t end = s.position + s.before.size();
    if (end > gates.size() ||
        !std::equal(s.before.begin(), s.before.end(),
                    gates.begin() + static_cast<std::ptrdiff_t>(s.position))) {
      throw PreconditionError("trace step '" + s.rule + "' at " + std::to_string(s.position) +
                              " does not match the circuit");
    }
    const auto at = gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(s.position),
                                gates.begin() + static_cast<std::ptrdiff_t>(end));
    gates.insert(at, s.after.begin(), s.after.end());
  }
  return input.with_gates(std::move(gates));
}

Circuit unfuse(const Circuit& c) {
  std::vector<Gate> gates;
  for (const Gate& g : c.gates()) {
    if (g.kind() == GateKind::FUSED) {
      gates.insert(gates.end(), g.body().begin(), g.body().end());
    } else {
      gates.push_back(g);
    }
  }
  return c.with_gates(std::move(gates));
}

}  // namespace qcost
