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

#include "qcost/multiplier.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "qcost/errors.hpp"
#include "qcost/semantics.hpp"

namespace qcost {

Circuit gen_ppgc(std::size_t n) {
  if (n < 2) throw PreconditionError("multiplier width must be at least 2");
  std::vector<LineRole> roles(2 * n, roles::pi);
  roles.resize(2 * n + n * n, roles::const0);
  std::vector<Gate> gates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gates.push_back(Gate::toffoli(i, n + j, ppgc_line(n, i, j)));
  }
  const std::size_t lines = roles.size();
  return Circuit(lines, std::move(roles), std::move(gates));
}

AdderArray gen_rpa(std::size_t n, const AdderBlock& full, const AdderBlock& half) {
  if (n < 2) throw PreconditionError("multiplier width must be at least 2");
  if (!full.is_full()) throw PreconditionError("full adder block has no carry input");
  if (half.is_full()) throw PreconditionError("half adder block has a carry input");
  validate_adder(full);
  validate_adder(half);

  std::vector<LineRole> roles(n * n, roles::pi);
  std::vector<Gate> gates;
  AdderArray out{Circuit(1, {roles::pi}), std::vector<Line>(2 * n), 0, 0};
  const auto p = [n](std::size_t i, std::size_t j) -> Line { return i * n + j; };

  struct SumCarry {
    Line sum, carry;
  };
  const auto place = [&](const AdderBlock& blk, Line a, Line b, std::optional<Line> c) {
    const Line anc = roles.size();
    roles.push_back(roles::const0);
    std::vector<Line> mapping(blk.circuit.n_lines());
    mapping[blk.pinout.a] = a;
    mapping[blk.pinout.b] = b;
    if (c) mapping[*blk.pinout.c_in] = *c;
    mapping[blk.pinout.ancilla] = anc;
    for (const Gate& g : blk.circuit.gates()) gates.push_back(g.remapped(mapping));
    ++(c ? out.full_adders : out.half_adders);
    return SumCarry{mapping[blk.sum_line], mapping[blk.carry_line]};
  };

  // Pending sum and carry bits keyed by weight.
  std::map<std::size_t, Line> sums, carries;
  out.product_lines[0] = p(0, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const SumCarry r = place(half, p(i + 1, 0), p(i, 1), std::nullopt);
    sums[i + 1] = r.sum;
    carries[i + 2] = r.carry;
  }
  sums[n] = p(n - 1, 1);
  out.product_lines[1] = sums[1];

  for (std::size_t row = 2; row < n; ++row) {
    std::map<std::size_t, Line> next_sums, next_carries;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t w = i + row;
      const SumCarry r = place(full, p(i, row), sums.at(w), carries.at(w));
      next_sums[w] = r.sum;
      next_carries[w + 1] = r.carry;
    }
    next_sums[n - 1 + row] = p(n - 1, row);
    out.product_lines[row] = next_sums.at(row);
    sums = std::move(next_sums);
    carries = std::move(next_carries);
  }

  SumCarry r = place(half, sums.at(n), carries.at(n), std::nullopt);
  out.product_lines[n] = r.sum;
  for (std::size_t w = n + 1; w + 1 < 2 * n; ++w) {
    r = place(full, sums.at(w), carries.at(w), r.carry);
    out.product_lines[w] = r.sum;
  }
  out.product_lines[2 * n - 1] = r.carry;

  for (LineRole& role : roles) role.output = OutputRole::Garbage;
  for (Line l : out.product_lines) roles[l].output = OutputRole::PrimaryOutput;
  const std::size_t lines = roles.size();
  out.circuit = Circuit(lines, std::move(roles), std::move(gates));
  return out;
}

Multiplier gen_multiplier(const MultiplierSpec& spec) {
  const std::size_t n = spec.n;
  const Circuit ppgc = gen_ppgc(n);
  const AdderArray rpa = gen_rpa(n, named_adder(spec.adder));

  // RPA line l lands on line l + 2n, so its partial-product inputs meet the
  // PPGC targets.
  const std::size_t offset = 2 * n;
  const std::size_t total = offset + rpa.circuit.n_lines();
  std::vector<LineRole> roles(total, roles::garbage(roles::const0));
  for (Line l = 0; l < offset; ++l) roles[l] = roles::pi;
  std::vector<Line> shift(rpa.circuit.n_lines());
  for (Line l = 0; l < shift.size(); ++l) shift[l] = l + offset;
  for (Line l : rpa.product_lines) roles[l + offset].output = OutputRole::PrimaryOutput;

  std::vector<Gate> gates = ppgc.gates();
  for (const Gate& g : rpa.circuit.gates()) gates.push_back(g.remapped(shift));
  const Circuit joined(total, std::move(roles), std::move(gates));

  // Final order: operands, product bits, then everything else.
  std::vector<Line> order;
  for (Line l = 0; l < offset; ++l) order.push_back(l);
  for (Line l : rpa.product_lines) order.push_back(l + offset);
  for (Line l = offset; l < total; ++l) {
    if (std::find(order.begin(), order.end(), l) == order.end()) order.push_back(l);
  }
  std::vector<Line> mapping(total);
  for (std::size_t k = 0; k < total; ++k) mapping[order[k]] = k;
  return Multiplier{relabel(joined, mapping), n, rpa.full_adders, rpa.half_adders};
}

MultiplierPinout multiplier_pinout(const Circuit& c, std::size_t n) {
  MultiplierPinout pins;
  std::vector<Line> inputs;
  for (Line l = 0; l < c.n_lines(); ++l) {
    if (c.role(l).input == InputRole::PrimaryInput) inputs.push_back(l);
  }
  if (inputs.size() != 2 * n) {
    throw PreconditionError("expected " + std::to_string(2 * n) + " primary inputs, found " +
                            std::to_string(inputs.size()));
  }
  pins.x.assign(inputs.begin(), inputs.begin() + static_cast<std::ptrdiff_t>(n));
  pins.y.assign(inputs.begin() + static_cast<std::ptrdiff_t>(n), inputs.end());
  for (Line l = 0; l < c.n_lines(); ++l) {
    if (c.role(l).output == OutputRole::PrimaryOutput &&
        std::find(inputs.begin(), inputs.end(), l) == inputs.end()) {
      pins.product.push_back(l);
    }
  }
  if (pins.product.size() != 2 * n) {
    throw PreconditionError("expected " + std::to_string(2 * n) + " product outputs, found " +
                            std::to_string(pins.product.size()));
  }
  return pins;
}

std::uint64_t multiply_with(const Circuit& c, const MultiplierPinout& pins, std::uint64_t x,
                            std::uint64_t y) {
  BitVector in(c.n_lines(), false);
  for (Line l = 0; l < c.n_lines(); ++l) in[l] = c.role(l).input == InputRole::ConstantOne;
  for (std::size_t k = 0; k < pins.x.size(); ++k) in[pins.x[k]] = (x >> k) & 1u;
  for (std::size_t k = 0; k < pins.y.size(); ++k) in[pins.y[k]] = (y >> k) & 1u;
  const BitVector out = simulate_basis(c, in);
  std::uint64_t product = 0;
  for (std::size_t k = 0; k < pins.product.size(); ++k) {
    if (out[pins.product[k]]) product |= std::uint64_t{1} << k;
  }
  return product;
}

VerifyResult verify_multiplier(const Circuit& c, std::size_t n, const VerifyOptions& options) {
  if (n < 1) throw PreconditionError("multiplier width must be positive");
  if (n > 8) throw ResourceError("multiplier verification is limited to n <= 8");
  const MultiplierPinout pins = multiplier_pinout(c, n);
  VerifyResult result;
  const auto check = [&](std::uint64_t x, std::uint64_t y) {
    ++result.checked;
    const std::uint64_t got = multiply_with(c, pins, x, y);
    if (got != x * y) {
      result.passed = false;
      result.x = x;
      result.y = y;
      result.got = got;
    }
    return result.passed;
  };
  const std::uint64_t range = std::uint64_t{1} << n;
  result.exhaustive = options.exhaustive || (!options.samples && n <= 4);
  if (result.exhaustive) {
    for (std::uint64_t x = 0; x < range; ++x) {
      for (std::uint64_t y = 0; y < range; ++y) {
        if (!check(x, y)) return result;
      }
    }
    return result;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, range - 1);
  const std::size_t samples = options.samples.value_or(10000);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::uint64_t x = dist(rng);
    const std::uint64_t y = dist(rng);
    if (!check(x, y)) return result;
  }
  return result;
}

CostReport metrics(const Circuit& c, const OptimizeOptions& options) {
  const ResourceCounts counts = resource_counts(c);
  CostReport r;
  r.gate_count = counts.gate_count;
  r.quantum_cost = quantum_cost(c, options);
  r.garbage = counts.garbage;
  r.constants = counts.constants;
  r.total_cost = r.gate_count + r.quantum_cost + r.garbage;
  return r;
}

std::string spec_name(const MultiplierSpec& spec) {
  if (!spec.name.empty()) return spec.name;
  return "proposed-n" + std::to_string(spec.n) + "-" + spec.adder;
}

std::vector<ComparisonRow> compare(const std::vector<MultiplierSpec>& specs,
                                   const std::vector<NamedCircuit>& external,
                                   const OptimizeOptions& options) {
  std::vector<ComparisonRow> rows;
  const auto add = [&](const std::string& name, const Circuit& c, std::size_t n) {
    bool verified = false;
    try {
      verified = verify_multiplier(c, n).passed;
    } catch (const Error&) {
      verified = false;
    }
    rows.push_back({name, metrics(c, options), verified});
  };
  for (const MultiplierSpec& spec : specs) add(spec_name(spec), gen_multiplier(spec).circuit, spec.n);
  for (const NamedCircuit& e : external) add(e.name, e.circuit, e.n);
  std::stable_sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    return a.report.total_cost < b.report.total_cost;
  });
  return rows;
}

std::string format_table(const std::vector<ComparisonRow>& rows) {
  const std::vector<std::string> header = {"design", "GC", "QC", "garbage", "constants", "TC",
                                           "verified"};
  std::vector<std::vector<std::string>> cells{header};
  for (const ComparisonRow& r : rows) {
    cells.push_back({r.name, std::to_string(r.report.gate_count),
                     std::to_string(r.report.quantum_cost), std::to_string(r.report.garbage),
                     std::to_string(r.report.constants), std::to_string(r.report.total_cost),
                     r.verified ? "yes" : "no"});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::size_t pad = width[k] - row[k].size();
      if (k == 0) {
        os << row[k] << std::string(pad, ' ');
      } else {
        os << "  " << std::string(pad, ' ') << row[k];
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string format_rows(const std::vector<ComparisonRow>& rows) {
  std::ostringstream os;
  for (const ComparisonRow& r : rows) {
    os << r.name << ',' << r.report.gate_count << ',' << r.report.quantum_cost << ','
       << r.report.garbage << ',' << r.report.constants << ',' << r.report.total_cost << ','
       << (r.verified ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace qcost
