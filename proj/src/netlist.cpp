// Copyright 2026 The mvlbench Authors.
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

#include "mvl/netlist.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <queue>

namespace mvl {

std::string_view to_string(SignalDomain domain) {
  switch (domain) {
    case SignalDomain::binary_rail: return "binary_rail";
    case SignalDomain::trit: return "trit";
    case SignalDomain::binary_valued_trit: return "binary_valued_trit";
  }
  return "?";
}

int domain_radix(SignalDomain domain) {
  return domain == SignalDomain::binary_rail ? 2 : 3;
}

int domain_cardinality(SignalDomain domain) {
  return domain == SignalDomain::trit ? 3 : 2;
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::inverter: return "inverter";
    case GateKind::nand: return "nand";
    case GateKind::nor: return "nor";
    case GateKind::xor3t: return "xor3t";
    case GateKind::complex_sop: return "complex_sop";
    case GateKind::decoder: return "decoder";
    case GateKind::sum_encoder: return "sum_encoder";
    case GateKind::carry_encoder: return "carry_encoder";
    case GateKind::mux2: return "mux2";
    case GateKind::pass_full_adder_8t: return "pass_full_adder_8t";
    case GateKind::and_gate: return "and_gate";
  }
  return "?";
}

std::string_view to_string(CostMode mode) {
  return mode == CostMode::catalog ? "catalog" : "principled";
}

bool Gate::level_restoring() const noexcept {
  return kind != GateKind::xor3t && kind != GateKind::pass_full_adder_8t;
}

int Gate::literal_count() const noexcept {
  int n = 0;
  for (const auto& term : products) n += static_cast<int>(term.size());
  return n;
}

namespace {

bool is_flag(SignalDomain d) {
  return d == SignalDomain::binary_rail || d == SignalDomain::binary_valued_trit;
}

bool is_ternary(SignalDomain d) {
  return d == SignalDomain::trit || d == SignalDomain::binary_valued_trit;
}

// A trit-typed port accepts a binary-valued trit; everything else must match.
bool port_accepts(SignalDomain port, SignalDomain actual) {
  return port == actual ||
         (port == SignalDomain::trit && actual == SignalDomain::binary_valued_trit);
}

std::string describe(const Gate& gate, std::size_t index) {
  if (gate.label.empty()) return fmt::format("gate #{} ({})", index, to_string(gate.kind));
  return fmt::format("gate #{} '{}' ({})", index, gate.label, to_string(gate.kind));
}

void check_shape(const Gate& gate, std::size_t index) {
  auto fail = [&](std::string_view what) {
    throw NetlistError(fmt::format("{}: {}", describe(gate, index), what));
  };
  auto expect_arity = [&](std::size_t ins, std::size_t outs) {
    if (gate.inputs.size() != ins || gate.outputs.size() != outs) {
      fail(fmt::format("expected {} inputs / {} outputs, got {} / {}", ins, outs,
                       gate.inputs.size(), gate.outputs.size()));
    }
  };
  auto flags_in = [&] {
    for (const auto& s : gate.inputs) {
      if (!is_flag(s.domain)) fail("input must be a two-valued signal");
    }
  };
  auto rails_out = [&] {
    for (const auto& s : gate.outputs) {
      if (s.domain != SignalDomain::binary_rail) fail("output must be a binary rail");
    }
  };

  switch (gate.kind) {
    case GateKind::inverter:
      expect_arity(1, 1);
      flags_in();
      rails_out();
      break;
    case GateKind::nand:
    case GateKind::nor:
      if (gate.inputs.size() < 2 || gate.outputs.size() != 1) {
        fail("needs at least 2 inputs and exactly 1 output");
      }
      flags_in();
      rails_out();
      break;
    case GateKind::xor3t:
    case GateKind::and_gate:
      expect_arity(2, 1);
      flags_in();
      rails_out();
      break;
    case GateKind::complex_sop: {
      if (gate.products.empty()) fail("no product terms");
      for (const auto& term : gate.products) {
        if (term.empty()) fail("empty product term");
        for (const auto& lit : term) {
          if (!is_flag(lit.domain)) fail("literal must be a two-valued signal");
          if (std::find(gate.inputs.begin(), gate.inputs.end(), lit) == gate.inputs.end()) {
            fail("literal is not listed among the gate inputs");
          }
        }
      }
      if (gate.outputs.size() != 1) fail("needs exactly 1 output");
      flags_in();
      rails_out();
      break;
    }
    case GateKind::decoder:
      expect_arity(1, 4);
      if (!is_ternary(gate.inputs[0].domain)) fail("input must be ternary");
      rails_out();
      break;
    case GateKind::sum_encoder:
      expect_arity(2, 1);
      flags_in();
      if (gate.outputs[0].domain != SignalDomain::trit) fail("output must be a trit");
      break;
    case GateKind::carry_encoder:
      expect_arity(1, 1);
      flags_in();
      if (gate.outputs[0].domain != SignalDomain::binary_valued_trit) {
        fail("output must be a binary-valued trit");
      }
      break;
    case GateKind::mux2:
      expect_arity(3, 1);
      flags_in();
      rails_out();
      break;
    case GateKind::pass_full_adder_8t:
      expect_arity(3, 2);
      flags_in();
      rails_out();
      break;
  }
}

inline bool flag(std::uint8_t v) { return v != 0; }

void eval_gate(const Gate& g, std::uint8_t* v) {
  auto in = [&](std::size_t i) { return v[g.inputs[i].id]; };
  auto set = [&](std::size_t i, bool b) { v[g.outputs[i].id] = b ? 1 : 0; };
  switch (g.kind) {
    case GateKind::inverter:
      set(0, !flag(in(0)));
      break;
    case GateKind::nand: {
      bool all = true;
      for (const auto& s : g.inputs) all = all && flag(v[s.id]);
      set(0, !all);
      break;
    }
    case GateKind::nor: {
      bool any = false;
      for (const auto& s : g.inputs) any = any || flag(v[s.id]);
      set(0, !any);
      break;
    }
    case GateKind::xor3t:
      set(0, flag(in(0)) != flag(in(1)));
      break;
    case GateKind::and_gate:
      set(0, flag(in(0)) && flag(in(1)));
      break;
    case GateKind::complex_sop: {
      bool any = false;
      for (const auto& term : g.products) {
        bool all = true;
        for (const auto& lit : term) {
          if (!flag(v[lit.id])) {
            all = false;
            break;
          }
        }
        if (all) {
          any = true;
          break;
        }
      }
      set(0, any != g.output_complemented);
      break;
    }
    case GateKind::decoder: {
      const int x = in(0);
      set(0, x < 2);
      set(1, x >= 2);
      set(2, x < 1);
      set(3, x >= 1);
      break;
    }
    case GateKind::sum_encoder: {
      const bool sum1_bar = flag(in(0));
      const bool sum2_bar = flag(in(1));
      v[g.outputs[0].id] = !sum2_bar ? 2 : (!sum1_bar ? 1 : 0);
      break;
    }
    case GateKind::carry_encoder:
      v[g.outputs[0].id] = flag(in(0)) ? 1 : 0;
      break;
    case GateKind::mux2:
      v[g.outputs[0].id] = flag(in(0)) ? (flag(in(2)) ? 1 : 0) : (flag(in(1)) ? 1 : 0);
      break;
    case GateKind::pass_full_adder_8t: {
      const int total = (flag(in(0)) ? 1 : 0) + (flag(in(1)) ? 1 : 0) + (flag(in(2)) ? 1 : 0);
      set(0, (total & 1) != 0);
      set(1, total >= 2);
      break;
    }
  }
}

}  // namespace

Netlist::Netlist(int radix, std::vector<Signal> signals, std::vector<Gate> gates,
                 std::vector<SignalRef> inputs, std::vector<SignalRef> outputs)
    : radix_(radix),
      signals_(std::move(signals)),
      gates_(std::move(gates)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
  if (radix_ < 2) throw NetlistError(fmt::format("radix {} is below 2", radix_));

  const std::size_t n = signals_.size();
  auto check_ref = [&](const SignalRef& s, std::string_view where) {
    if (s.id >= n) {
      throw NetlistError(fmt::format("{} references unknown signal {}", where, s.id));
    }
    if (signals_[s.id].domain != s.domain) {
      throw NetlistError(fmt::format("{} uses signal {} as {} but it is {}", where, s.id,
                                     to_string(s.domain),
                                     to_string(signals_[s.id].domain)));
    }
  };

  constexpr std::uint32_t kUndriven = std::numeric_limits<std::uint32_t>::max();
  constexpr std::uint32_t kPrimary = kUndriven - 1;
  std::vector<std::uint32_t> driver(n, kUndriven);
  for (const auto& s : inputs_) {
    check_ref(s, "input list");
    if (driver[s.id] != kUndriven) {
      throw NetlistError(fmt::format("signal {} is listed as an input twice", s.id));
    }
    driver[s.id] = kPrimary;
  }
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const auto& gate = gates_[g];
    check_shape(gate, g);
    for (const auto& s : gate.inputs) check_ref(s, describe(gate, g));
    for (const auto& s : gate.outputs) {
      check_ref(s, describe(gate, g));
      if (driver[s.id] == kPrimary) {
        throw NetlistError(fmt::format("{} drives primary input {}", describe(gate, g), s.id));
      }
      if (driver[s.id] != kUndriven) {
        throw NetlistError(fmt::format("signal {} has more than one driver", s.id));
      }
      driver[s.id] = static_cast<std::uint32_t>(g);
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (driver[s] == kUndriven) {
      throw NetlistError(fmt::format("signal {} ('{}') is neither an input nor driven", s,
                                     signals_[s].name));
    }
  }
  for (const auto& s : outputs_) check_ref(s, "output list");

  // Kahn's algorithm; the ready queue is ordered by gate index so ties go to
  // insertion order.
  std::vector<std::vector<std::uint32_t>> readers(n);
  std::vector<std::uint32_t> pending(gates_.size(), 0);
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    for (const auto& s : gates_[g].inputs) {
      if (driver[s.id] != kPrimary) {
        readers[s.id].push_back(static_cast<std::uint32_t>(g));
        ++pending[g];
      }
    }
  }
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    if (pending[g] == 0) ready.push(static_cast<std::uint32_t>(g));
  }
  order_.reserve(gates_.size());
  while (!ready.empty()) {
    const auto g = ready.top();
    ready.pop();
    order_.push_back(g);
    for (const auto& out : gates_[g].outputs) {
      for (auto r : readers[out.id]) {
        if (--pending[r] == 0) ready.push(r);
      }
    }
  }
  if (order_.size() != gates_.size()) {
    for (std::size_t g = 0; g < gates_.size(); ++g) {
      if (pending[g] != 0) {
        throw NetlistError(
            fmt::format("combinational cycle through {}", describe(gates_[g], g)));
      }
    }
  }
}

void Netlist::check_assignment(std::span<const int> assignment) const {
  if (assignment.size() != inputs_.size()) {
    throw EvaluationError(fmt::format("expected {} input values, got {}", inputs_.size(),
                                      assignment.size()));
  }
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    const int card = domain_cardinality(inputs_[i].domain);
    if (assignment[i] < 0 || assignment[i] >= card) {
      throw EvaluationError(fmt::format("input {} ('{}') is {} but its domain {} allows [0, {})",
                                        i, signals_[inputs_[i].id].name, assignment[i],
                                        to_string(inputs_[i].domain), card));
    }
  }
}

std::vector<int> Netlist::evaluate(std::span<const int> assignment) const {
  std::vector<std::uint8_t> scratch(signals_.size(), 0);
  std::vector<int> out(outputs_.size(), 0);
  evaluate(assignment, scratch, out);
  return out;
}

void Netlist::evaluate(std::span<const int> assignment, std::span<std::uint8_t> scratch,
                       std::span<int> out) const {
  check_assignment(assignment);
  if (scratch.size() < signals_.size() || out.size() < outputs_.size()) {
    throw EvaluationError("scratch or output buffer too small");
  }
  std::uint8_t* v = scratch.data();
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    v[inputs_[i].id] = static_cast<std::uint8_t>(assignment[i]);
  }
  for (auto g : order_) eval_gate(gates_[g], v);
  for (std::size_t i = 0; i < outputs_.size(); ++i) out[i] = v[outputs_[i].id];
}

const TruthRow* TruthTable::find(std::span<const int> inputs) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), inputs,
                             [](const TruthRow& row, std::span<const int> key) {
                               return std::lexicographical_compare(
                                   row.inputs.begin(), row.inputs.end(), key.begin(),
                                   key.end());
                             });
  if (it == rows.end() || !std::equal(it->inputs.begin(), it->inputs.end(), inputs.begin(),
                                      inputs.end())) {
    return nullptr;
  }
  return &*it;
}

CapacityExceeded::CapacityExceeded(std::uint64_t required, std::uint64_t cap)
    : std::length_error(fmt::format(
          "exhaustive sweep needs {} input tuples, above the cap of {}; use sampled mode",
          required, cap)),
      required_(required),
      cap_(cap) {}

std::uint64_t input_space_size(const Netlist& netlist) {
  std::uint64_t size = 1;
  for (const auto& s : netlist.inputs()) {
    const auto card = static_cast<std::uint64_t>(domain_cardinality(s.domain));
    if (size > std::numeric_limits<std::uint64_t>::max() / card) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    size *= card;
  }
  return size;
}

TruthTable exhaustive_table(const Netlist& netlist, std::uint64_t cap) {
  const auto size = input_space_size(netlist);
  if (size > cap) throw CapacityExceeded(size, cap);

  TruthTable table;
  for (const auto& s : netlist.inputs()) {
    table.input_cardinalities.push_back(domain_cardinality(s.domain));
  }
  for (const auto& s : netlist.outputs()) {
    table.output_cardinalities.push_back(domain_cardinality(s.domain));
  }
  table.rows.reserve(static_cast<std::size_t>(size));
  std::vector<std::uint8_t> scratch(netlist.signals().size());
  std::vector<int> out(netlist.outputs().size());
  for_each_assignment(table.input_cardinalities, [&](std::span<const int> in) {
    netlist.evaluate(in, scratch, out);
    table.rows.push_back({{in.begin(), in.end()}, out});
  });
  return table;
}

int principled_cost(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::inverter: return 2;
    case GateKind::nand:
    case GateKind::nor: return 2 * static_cast<int>(gate.inputs.size());
    case GateKind::and_gate: return 6;
    case GateKind::xor3t: return 3;
    case GateKind::complex_sop: return 2 * gate.literal_count();
    case GateKind::decoder: return 8;
    case GateKind::sum_encoder: return 6;
    case GateKind::carry_encoder: return 4;
    case GateKind::mux2: return 8;
    case GateKind::pass_full_adder_8t: return 8;
  }
  return 0;
}

long long transistor_count(const Netlist& netlist, CostMode mode) {
  long long total = 0;
  for (const auto& g : netlist.gates()) {
    if (mode == CostMode::catalog && g.cost_override) {
      total += *g.cost_override;
    } else {
      total += principled_cost(g);
    }
  }
  return total;
}

int depth_weight(GateKind kind) { return kind == GateKind::decoder ? 2 : 1; }

int depth(const Netlist& netlist) {
  std::vector<int> level(netlist.signals().size(), 0);
  for (auto g : netlist.order()) {
    const auto& gate = netlist.gates()[g];
    int in = 0;
    for (const auto& s : gate.inputs) in = std::max(in, level[s.id]);
    for (const auto& s : gate.outputs) level[s.id] = in + depth_weight(gate.kind);
  }
  int d = 0;
  for (const auto& s : netlist.outputs()) d = std::max(d, level[s.id]);
  return d;
}

// --- builder ---------------------------------------------------------------

SignalRef NetlistBuilder::new_signal(SignalDomain domain, std::string name) {
  SignalRef ref{static_cast<std::uint32_t>(signals_.size()), domain};
  signals_.push_back({domain, std::move(name)});
  return ref;
}

SignalRef NetlistBuilder::input(SignalDomain domain, std::string name) {
  auto ref = new_signal(domain, std::move(name));
  inputs_.push_back(ref);
  return ref;
}

void NetlistBuilder::output(SignalRef signal, std::string name) {
  if (signal.id >= signals_.size()) {
    throw NetlistError(fmt::format("output references unknown signal {}", signal.id));
  }
  if (!name.empty()) signals_[signal.id].name = std::move(name);
  outputs_.push_back(signal);
}

std::size_t NetlistBuilder::add_gate(Gate gate) {
  gates_.push_back(std::move(gate));
  return gates_.size() - 1;
}

void NetlistBuilder::set_cost_override(std::size_t gate_index, int cost) {
  gates_.at(gate_index).cost_override = cost;
}

SignalRef NetlistBuilder::single_output_gate(GateKind kind, std::vector<SignalRef> ins,
                                             SignalDomain out_domain, std::string label) {
  auto out = new_signal(out_domain, label);
  Gate g;
  g.kind = kind;
  g.inputs = std::move(ins);
  g.outputs = {out};
  g.label = std::move(label);
  add_gate(std::move(g));
  return out;
}

SignalRef NetlistBuilder::inverter(SignalRef in, std::string label) {
  return single_output_gate(GateKind::inverter, {in}, SignalDomain::binary_rail,
                            std::move(label));
}

SignalRef NetlistBuilder::nand(std::vector<SignalRef> ins, std::string label) {
  return single_output_gate(GateKind::nand, std::move(ins), SignalDomain::binary_rail,
                            std::move(label));
}

SignalRef NetlistBuilder::nor(std::vector<SignalRef> ins, std::string label) {
  return single_output_gate(GateKind::nor, std::move(ins), SignalDomain::binary_rail,
                            std::move(label));
}

SignalRef NetlistBuilder::and_gate(SignalRef a, SignalRef b, std::string label) {
  return single_output_gate(GateKind::and_gate, {a, b}, SignalDomain::binary_rail,
                            std::move(label));
}

SignalRef NetlistBuilder::xor3t(SignalRef a, SignalRef b, std::string label) {
  return single_output_gate(GateKind::xor3t, {a, b}, SignalDomain::binary_rail,
                            std::move(label));
}

SignalRef NetlistBuilder::complex_sop(std::vector<std::vector<SignalRef>> products,
                                      bool output_complemented, std::string label) {
  std::vector<SignalRef> ins;
  for (const auto& term : products) {
    for (const auto& lit : term) {
      if (std::find(ins.begin(), ins.end(), lit) == ins.end()) ins.push_back(lit);
    }
  }
  auto out = new_signal(SignalDomain::binary_rail, label);
  Gate g;
  g.kind = GateKind::complex_sop;
  g.inputs = std::move(ins);
  g.outputs = {out};
  g.products = std::move(products);
  g.output_complemented = output_complemented;
  g.label = std::move(label);
  add_gate(std::move(g));
  return out;
}

DecodedRails NetlistBuilder::decoder(SignalRef in, std::string label) {
  const std::string base = label.empty() ? std::string("dec") : label;
  DecodedRails rails{new_signal(SignalDomain::binary_rail, base + ".a1_bar"),
                     new_signal(SignalDomain::binary_rail, base + ".a1"),
                     new_signal(SignalDomain::binary_rail, base + ".a0_bar"),
                     new_signal(SignalDomain::binary_rail, base + ".a0")};
  Gate g;
  g.kind = GateKind::decoder;
  g.inputs = {in};
  g.outputs = {rails.a1_bar, rails.a1, rails.a0_bar, rails.a0};
  g.label = std::move(label);
  add_gate(std::move(g));
  return rails;
}

SignalRef NetlistBuilder::sum_encoder(SignalRef sum1_bar, SignalRef sum2_bar,
                                      std::string label) {
  return single_output_gate(GateKind::sum_encoder, {sum1_bar, sum2_bar}, SignalDomain::trit,
                            std::move(label));
}

SignalRef NetlistBuilder::carry_encoder(SignalRef carry, std::string label) {
  return single_output_gate(GateKind::carry_encoder, {carry},
                            SignalDomain::binary_valued_trit, std::move(label));
}

SignalRef NetlistBuilder::mux2(SignalRef select, SignalRef data0, SignalRef data1,
                               std::string label) {
  return single_output_gate(GateKind::mux2, {select, data0, data1},
                            SignalDomain::binary_rail, std::move(label));
}

std::pair<SignalRef, SignalRef> NetlistBuilder::pass_full_adder_8t(SignalRef a, SignalRef b,
                                                                    SignalRef cin,
                                                                    std::string label) {
  const std::string base = label.empty() ? std::string("fa8t") : label;
  auto sum = new_signal(SignalDomain::binary_rail, base + ".sum");
  auto carry = new_signal(SignalDomain::binary_rail, base + ".carry");
  Gate g;
  g.kind = GateKind::pass_full_adder_8t;
  g.inputs = {a, b, cin};
  g.outputs = {sum, carry};
  g.label = std::move(label);
  add_gate(std::move(g));
  return {sum, carry};
}

std::vector<SignalRef> NetlistBuilder::instantiate(const Netlist& sub,
                                                   std::span<const SignalRef> bindings,
                                                   std::string_view prefix) {
  if (bindings.size() != sub.inputs().size()) {
    throw NetlistError(fmt::format("instance '{}' expects {} bindings, got {}", prefix,
                                   sub.inputs().size(), bindings.size()));
  }
  constexpr auto kUnmapped = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> map(sub.signals().size(), kUnmapped);
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    const auto port = sub.inputs()[i];
    if (!port_accepts(port.domain, bindings[i].domain)) {
      throw NetlistError(fmt::format("instance '{}' port '{}' is {} but was bound to {}",
                                     prefix, sub.signals()[port.id].name,
                                     to_string(port.domain), to_string(bindings[i].domain)));
    }
    map[port.id] = bindings[i].id;
  }
  auto qualify = [&](const std::string& name) {
    if (prefix.empty()) return name;
    return fmt::format("{}/{}", prefix, name);
  };
  auto remap = [&](const SignalRef& s) {
    if (map[s.id] == kUnmapped) {
      map[s.id] = new_signal(s.domain, qualify(sub.signals()[s.id].name)).id;
    }
    // Bound ports keep the caller's domain.
    return SignalRef{map[s.id], signals_[map[s.id]].domain};
  };
  for (const auto& gate : sub.gates()) {
    Gate copy = gate;
    for (auto& s : copy.inputs) s = remap(s);
    for (auto& s : copy.outputs) s = remap(s);
    for (auto& term : copy.products) {
      for (auto& lit : term) lit = remap(lit);
    }
    copy.label = qualify(gate.label);
    add_gate(std::move(copy));
  }
  std::vector<SignalRef> outs;
  outs.reserve(sub.outputs().size());
  for (const auto& s : sub.outputs()) outs.push_back(remap(s));
  return outs;
}

Netlist NetlistBuilder::build() && {
  return Netlist(radix_, std::move(signals_), std::move(gates_), std::move(inputs_),
                 std::move(outputs_));
}

}  // namespace mvl
