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

#pragma once

// Acyclic gate-level IR for mixed binary/ternary circuits.
//
// Signals live in one of three domains. Binary rails carry the decoded
// {0, 2} levels as flags; trits carry {0, 1, 2}; binary-valued trits are
// ternary wires that only ever hold {0, 1} (every carry in the ternary
// adders and multipliers). Gates that consume flags accept either a rail or
// a binary-valued trit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

enum class SignalDomain : std::uint8_t { binary_rail, trit, binary_valued_trit };

std::string_view to_string(SignalDomain domain);

/// Radix of the wire (2 for rails, 3 for both ternary domains).
int domain_radix(SignalDomain domain);

/// Number of values a wire of this domain can hold.
int domain_cardinality(SignalDomain domain);

struct SignalRef {
  std::uint32_t id = 0;
  SignalDomain domain = SignalDomain::binary_rail;

  int radix() const { return domain_radix(domain); }
  friend bool operator==(const SignalRef&, const SignalRef&) = default;
};

enum class GateKind : std::uint8_t {
  inverter,
  nand,
  nor,
  xor3t,
  complex_sop,
  decoder,
  sum_encoder,
  carry_encoder,
  mux2,
  pass_full_adder_8t,
  and_gate,
};

std::string_view to_string(GateKind kind);

struct Gate {
  GateKind kind = GateKind::inverter;
  std::vector<SignalRef> inputs;
  std::vector<SignalRef> outputs;
  /// complex_sop only: OR of AND terms, each term a list of flag signals.
  std::vector<std::vector<SignalRef>> products;
  bool output_complemented = false;
  std::optional<int> cost_override;
  std::string label;

  /// False for the pass-transistor kinds (Xor3T, PassFullAdder8T).
  bool level_restoring() const noexcept;
  int literal_count() const noexcept;
};

/// Thrown when a netlist violates its structural invariants.
class NetlistError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an assignment does not match the netlist's inputs.
class EvaluationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Netlist {
 public:
  struct Signal {
    SignalDomain domain;
    std::string name;
  };

  /// Validates arity, domains, single drivers and acyclicity, then fixes a
  /// topological gate order (ties broken by insertion order).
  Netlist(int radix, std::vector<Signal> signals, std::vector<Gate> gates,
          std::vector<SignalRef> inputs, std::vector<SignalRef> outputs);

  int radix() const noexcept { return radix_; }
  std::span<const Signal> signals() const noexcept { return signals_; }
  std::span<const Gate> gates() const noexcept { return gates_; }
  std::span<const SignalRef> inputs() const noexcept { return inputs_; }
  std::span<const SignalRef> outputs() const noexcept { return outputs_; }
  std::span<const std::uint32_t> order() const noexcept { return order_; }

  std::vector<int> evaluate(std::span<const int> assignment) const;

  /// Allocation-free variant for sweeps. `scratch` must hold one byte per
  /// signal and `out` one slot per output.
  void evaluate(std::span<const int> assignment, std::span<std::uint8_t> scratch,
                std::span<int> out) const;

 private:
  void check_assignment(std::span<const int> assignment) const;

  int radix_;
  std::vector<Signal> signals_;
  std::vector<Gate> gates_;
  std::vector<SignalRef> inputs_;
  std::vector<SignalRef> outputs_;
  std::vector<std::uint32_t> order_;
};

inline std::vector<int> evaluate(const Netlist& netlist,
                                 std::span<const int> assignment) {
  return netlist.evaluate(assignment);
}

struct TruthRow {
  std::vector<int> inputs;
  std::vector<int> outputs;

  friend bool operator==(const TruthRow&, const TruthRow&) = default;
};

/// Exhaustive input -> output map; rows in lexicographic input order with the
/// first input most significant.
struct TruthTable {
  std::vector<int> input_cardinalities;
  std::vector<int> output_cardinalities;
  std::vector<TruthRow> rows;

  std::size_t arity() const noexcept { return input_cardinalities.size(); }
  const TruthRow* find(std::span<const int> inputs) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

inline constexpr std::uint64_t kDefaultInputSpaceCap = std::uint64_t{1} << 24;

/// Raised when an exhaustive sweep would exceed the configured cap.
class CapacityExceeded : public std::length_error {
 public:
  CapacityExceeded(std::uint64_t required, std::uint64_t cap);

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// Product of the input cardinalities, saturating at UINT64_MAX.
std::uint64_t input_space_size(const Netlist& netlist);

/// Calls `visit` for every input tuple in lexicographic order.
template <typename Visit>
void for_each_assignment(std::span<const int> cardinalities, Visit&& visit) {
  std::vector<int> tuple(cardinalities.size(), 0);
  while (true) {
    visit(std::span<const int>(tuple));
    std::size_t i = tuple.size();
    while (i > 0) {
      --i;
      if (++tuple[i] < cardinalities[i]) break;
      tuple[i] = 0;
      if (i == 0) return;
    }
    if (tuple.empty()) return;
  }
}

TruthTable exhaustive_table(const Netlist& netlist,
                            std::uint64_t cap = kDefaultInputSpaceCap);

enum class CostMode { catalog, principled };

std::string_view to_string(CostMode mode);

/// Transistor cost of one gate under the principled rule: inverter 2, n-input
/// NAND/NOR 2n, AND 6, 3T XOR 3, complex gate 2 per literal, decoder 8, sum
/// encoder 6, carry encoder 4, mux 8, 8T full adder 8.
int principled_cost(const Gate& gate);

long long transistor_count(const Netlist& netlist, CostMode mode);

/// Depth contribution of one gate: a decoder is two cascaded inverter
/// stages, every other kind is one stage.
int depth_weight(GateKind kind);

/// Longest input -> output path, in gate stages.
int depth(const Netlist& netlist);

/// The four rails produced by one decoder, in output order.
struct DecodedRails {
  SignalRef a1_bar;
  SignalRef a1;
  SignalRef a0_bar;
  SignalRef a0;
};

class NetlistBuilder {
 public:
  explicit NetlistBuilder(int radix) : radix_(radix) {}

  SignalRef input(SignalDomain domain, std::string name);
  /// Marks `signal` as an output, renaming it when `name` is non-empty.
  void output(SignalRef signal, std::string name = {});

  SignalRef new_signal(SignalDomain domain, std::string name = {});
  std::size_t add_gate(Gate gate);
  void set_cost_override(std::size_t gate_index, int cost);
  std::size_t gate_count() const noexcept { return gates_.size(); }

  SignalRef inverter(SignalRef in, std::string label = {});
  SignalRef nand(std::vector<SignalRef> ins, std::string label = {});
  SignalRef nor(std::vector<SignalRef> ins, std::string label = {});
  SignalRef and_gate(SignalRef a, SignalRef b, std::string label = {});
  SignalRef xor3t(SignalRef a, SignalRef b, std::string label = {});
  SignalRef complex_sop(std::vector<std::vector<SignalRef>> products,
                        bool output_complemented, std::string label = {});
  DecodedRails decoder(SignalRef in, std::string label = {});
  SignalRef sum_encoder(SignalRef sum1_bar, SignalRef sum2_bar,
                        std::string label = {});
  SignalRef carry_encoder(SignalRef carry, std::string label = {});
  SignalRef mux2(SignalRef select, SignalRef data0, SignalRef data1,
                 std::string label = {});
  /// Returns {sum, carry}.
  std::pair<SignalRef, SignalRef> pass_full_adder_8t(SignalRef a, SignalRef b,
                                                      SignalRef cin,
                                                      std::string label = {});

  /// Copies `sub` into this netlist with its inputs bound to `bindings`.
  /// Gate labels get `prefix` + "/" prepended. Returns the mapped outputs.
  std::vector<SignalRef> instantiate(const Netlist& sub,
                                     std::span<const SignalRef> bindings,
                                     std::string_view prefix = {});

  Netlist build() &&;

 private:
  SignalRef single_output_gate(GateKind kind, std::vector<SignalRef> ins,
                               SignalDomain out_domain, std::string label);

  int radix_;
  std::vector<Netlist::Signal> signals_;
  std::vector<Gate> gates_;
  std::vector<SignalRef> inputs_;
  std::vector<SignalRef> outputs_;
};

}  // namespace mvl
