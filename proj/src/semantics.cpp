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

#include "qcost/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "qcost/errors.hpp"

namespace qcost {

std::uint64_t state_index(const BitVector& bits) {
  if (bits.size() > 64) throw ResourceError("state wider than 64 lines");
  std::uint64_t x = 0;
  for (bool b : bits) x = (x << 1) | (b ? 1u : 0u);
  return x;
}

BitVector state_bits(std::uint64_t index, std::size_t n_lines) {
  BitVector bits(n_lines);
  for (std::size_t l = 0; l < n_lines; ++l) {
    bits[l] = (index >> (n_lines - 1 - l)) & 1u;
  }
  return bits;
}

BitVector parse_bits(const std::string& text) {
  BitVector bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch == '0') bits.push_back(false);
    else if (ch == '1') bits.push_back(true);
    else throw PreconditionError("bit string may only contain 0 and 1: " + text);
  }
  return bits;
}

std::string format_bits(const BitVector& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

namespace {

bool controls_set(const Gate& g, const BitVector& state) {
  for (Line c : g.controls()) {
    if (!state[c]) return false;
  }
  return true;
}

}  // namespace

void apply_classical(const Gate& g, BitVector& state) {
  switch (g.kind()) {
    case GateKind::NOT:
    case GateKind::CNOT:
    case GateKind::TOFFOLI:
      if (controls_set(g, state)) state[g.targets()[0]].flip();
      return;
    case GateKind::SWAP:
    case GateKind::FREDKIN:
      if (controls_set(g, state)) {
        const bool t0 = state[g.targets()[0]];
        state[g.targets()[0]] = state[g.targets()[1]];
        state[g.targets()[1]] = t0;
      }
      return;
    case GateKind::PERES: {
      const Line a = g.controls()[0], b = g.controls()[1], t = g.targets()[0];
      if (state[a] && state[b]) state[t].flip();
      if (state[a]) state[b].flip();
      return;
    }
    default:
      throw SemanticsError("basis simulation met non-classical gate " + g.to_string());
  }
}

BitVector simulate_basis(const Circuit& c, const BitVector& input) {
  if (input.size() != c.n_lines()) {
    throw PreconditionError("input has " + std::to_string(input.size()) +
                            " bits for a " + std::to_string(c.n_lines()) + "-line circuit");
  }
  for (Line l = 0; l < c.n_lines(); ++l) {
    const InputRole r = c.role(l).input;
    if ((r == InputRole::ConstantZero && input[l]) ||
        (r == InputRole::ConstantOne && !input[l])) {
      throw PreconditionError("constant line " + std::to_string(l) +
                              " does not carry its declared value");
    }
  }
  for (const Gate& g : c.gates()) {
    if (!is_classical(g.kind())) {
      throw SemanticsError("basis simulation met non-classical gate " + g.to_string());
    }
  }
  BitVector state = input;
  for (const Gate& g : c.gates()) apply_classical(g, state);
  return state;
}

bool Permutation::is_bijection() const {
  std::vector<bool> hit(image.size(), false);
  for (std::uint64_t y : image) {
    if (y >= image.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (image[x] != x) return false;
  }
  return true;
}

Permutation permutation_of(const Circuit& c, std::size_t max_lines) {
  const std::size_t n = c.n_lines();
  if (n > max_lines) {
    throw ResourceError("permutation of " + std::to_string(n) +
                        " lines exceeds bound " + std::to_string(max_lines));
  }
  for (const Gate& g : c.gates()) {
    if (!is_classical(g.kind())) {
      throw SemanticsError("permutation_of met non-classical gate " + g.to_string());
    }
  }
  Permutation p;
  p.n_lines = n;
  p.image.resize(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < p.image.size(); ++x) {
    BitVector state = state_bits(x, n);
    for (const Gate& g : c.gates()) apply_classical(g, state);
    p.image[x] = state_index(state);
  }
  return p;
}

ExactUnitary::ExactUnitary(std::size_t n_lines)
    : n_lines_(n_lines), dim_(std::size_t{1} << n_lines), entries_(dim_ * dim_) {
  for (std::size_t i = 0; i < dim_; ++i) (*this)(i, i) = DyadicGaussian::one();
}

namespace {

struct Mat2 {
  DyadicGaussian m00, m01, m10, m11;
};

const Mat2& v_matrix() {
  static const Mat2 m{{1, 1, 1}, {1, -1, 1}, {1, -1, 1}, {1, 1, 1}};
  return m;
}

const Mat2& v_dag_matrix() {
  static const Mat2 m{{1, -1, 1}, {1, 1, 1}, {1, 1, 1}, {1, -1, 1}};
  return m;
}

}  // namespace

void ExactUnitary::apply(const Gate& g) {
  const auto mask = [&](Line l) -> std::size_t {
    return std::size_t{1} << (n_lines_ - 1 - l);
  };
  std::size_t ctrl = 0;
  for (Line c : g.controls()) ctrl |= mask(c);

  const auto swap_rows = [&](std::size_t r0, std::size_t r1) {
    for (std::size_t col = 0; col < dim_; ++col) {
      std::swap((*this)(r0, col), (*this)(r1, col));
    }
  };

  switch (g.kind()) {
    case GateKind::NOT:
    case GateKind::CNOT:
    case GateKind::TOFFOLI: {
      const std::size_t t = mask(g.targets()[0]);
      for (std::size_t r = 0; r < dim_; ++r) {
        if ((r & ctrl) == ctrl && !(r & t)) swap_rows(r, r | t);
      }
      return;
    }
    case GateKind::SWAP:
    case GateKind::FREDKIN: {
      const std::size_t a = mask(g.targets()[0]);
      const std::size_t b = mask(g.targets()[1]);
      for (std::size_t r = 0; r < dim_; ++r) {
        if ((r & ctrl) == ctrl && (r & a) && !(r & b)) swap_rows(r, (r ^ a) | b);
      }
      return;
    }
    case GateKind::PERES: {
      const Line a = g.controls()[0], b = g.controls()[1], t = g.targets()[0];
      apply(Gate::toffoli(a, b, t));
      apply(Gate::cnot(a, b));
      return;
    }
    case GateKind::V:
    case GateKind::V_DAG:
    case GateKind::CV:
    case GateKind::CV_DAG: {
      const bool dag = g.kind() == GateKind::V_DAG || g.kind() == GateKind::CV_DAG;
      const Mat2& m = dag ? v_dag_matrix() : v_matrix();
      const std::size_t t = mask(g.targets()[0]);
      for (std::size_t r = 0; r < dim_; ++r) {
        if ((r & ctrl) != ctrl || (r & t)) continue;
        const std::size_t r1 = r | t;
        for (std::size_t col = 0; col < dim_; ++col) {
          const DyadicGaussian x0 = (*this)(r, col);
          const DyadicGaussian x1 = (*this)(r1, col);
          (*this)(r, col) = m.m00 * x0 + m.m01 * x1;
          (*this)(r1, col) = m.m10 * x0 + m.m11 * x1;
        }
      }
      return;
    }
    case GateKind::FUSED:
      for (const Gate& part : g.body()) apply(part);
      return;
  }
}

ExactUnitary ExactUnitary::adjoint() const {
  ExactUnitary r(n_lines_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i).conj();
  }
  return r;
}

bool ExactUnitary::is_identity() const { return *this == ExactUnitary(n_lines_); }

bool ExactUnitary::is_unitary() const { return (*this * adjoint()).is_identity(); }

ExactUnitary operator*(const ExactUnitary& a, const ExactUnitary& b) {
  if (a.n_lines_ != b.n_lines_) throw StructuralError("matrix size mismatch");
  ExactUnitary r(a.n_lines_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t j = 0; j < a.dim_; ++j) {
      DyadicGaussian acc;
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const DyadicGaussian& x = a(i, k);
        if (x.is_zero()) continue;
        acc += x * b(k, j);
      }
      r(i, j) = acc;
    }
  }
  return r;
}

std::string ExactUnitary::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
    os << '\n';
  }
  return os.str();
}

ExactUnitary unitary_of_gates(std::span<const Gate> gates, std::size_t n_lines,
                              std::size_t max_lines) {
  if (n_lines > max_lines) {
    throw ResourceError("unitary of " + std::to_string(n_lines) +
                        " lines exceeds bound " + std::to_string(max_lines));
  }
  ExactUnitary u(n_lines);
  for (const Gate& g : gates) {
    if (g.max_line() >= n_lines) throw StructuralError("gate outside matrix lines");
    u.apply(g);
  }
  return u;
}

ExactUnitary unitary_of(const Circuit& c, std::size_t max_lines) {
  return unitary_of_gates(c.gates(), c.n_lines(), max_lines);
}

namespace {

bool all_classical(const Circuit& c) {
  return std::all_of(c.gates().begin(), c.gates().end(),
                     [](const Gate& g) { return is_classical(g.kind()); });
}

}  // namespace

bool equivalent(const Circuit& c1, const Circuit& c2, EquivalenceBounds bounds) {
  if (c1.n_lines() != c2.n_lines()) {
    throw StructuralError("equivalence check needs equal line counts");
  }
  if (all_classical(c1) && all_classical(c2)) {
    return permutation_of(c1, bounds.permutation_lines) ==
           permutation_of(c2, bounds.permutation_lines);
  }
  return unitary_of(c1, bounds.unitary_lines) == unitary_of(c2, bounds.unitary_lines);
}

bool equivalent_gates(std::span<const Gate> a, std::span<const Gate> b,
                      std::size_t n_lines) {
  return unitary_of_gates(a, n_lines) == unitary_of_gates(b, n_lines);
}

ExactUnitary local_unitary(std::span<const Gate> gates, std::vector<Line>* support) {
  std::vector<Line> lines;
  for (const Gate& g : gates) {
    for (Line l : g.lines()) {
      if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
    }
  }
  Line top = 0;
  for (Line l : lines) top = std::max(top, l);
  std::vector<Line> mapping(lines.empty() ? 0 : top + 1, 0);
  for (std::size_t i = 0; i < lines.size(); ++i) mapping[lines[i]] = i;
  if (lines.size() > kDefaultUnitaryBound) {
    throw ResourceError("local unitary support exceeds bound");
  }
  ExactUnitary u(lines.size());
  for (const Gate& g : gates) u.apply(g.remapped(mapping));
  if (support) *support = std::move(lines);
  return u;
}

bool commute(const Gate& g1, const Gate& g2, std::size_t n_lines) {
  if (g1.max_line() >= n_lines || g2.max_line() >= n_lines) {
    throw StructuralError("gate outside circuit lines");
  }
  bool shared = false;
  for (Line l : g1.lines()) shared = shared || g2.touches(l);
  if (!shared) return true;
  const Gate ab[] = {g1, g2};
  const Gate ba[] = {g2, g1};
  std::vector<Line> support;
  const ExactUnitary u_ab = local_unitary(ab, &support);
  // Same support ordering for both products: g1's lines then g2's.
  std::vector<Line> mapping(std::max(g1.max_line(), g2.max_line()) + 1, 0);
  for (std::size_t i = 0; i < support.size(); ++i) mapping[support[i]] = i;
  ExactUnitary u_ba(support.size());
  for (const Gate& g : ba) u_ba.apply(g.remapped(mapping));
  return u_ab == u_ba;
}

}  // namespace qcost
