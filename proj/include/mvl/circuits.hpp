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

// Generators for the one-digit ternary and binary circuits and their
// word-level compositions (ripple-carry adders, Wallace-tree multipliers).
//
// Ternary circuits follow the decode / binary-core / encode scheme: every
// trit input is decoded into threshold rails, the arithmetic is done with
// static complex gates over those rails, and the results are re-encoded.

#include "mvl/netlist.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace mvl {

/// `printed` keeps the published full-adder equations verbatim (they are
/// wrong for three inputs); `corrected` uses exhaustively validated forms.
enum class EquationSet { printed, corrected };

enum class BinaryHalfAdder { nand, xor3t };
enum class BinaryFullAdder { nand, xor3t, pass8t };

std::string_view to_string(EquationSet eqs);
std::string_view to_string(BinaryHalfAdder variant);
std::string_view to_string(BinaryFullAdder variant);
EquationSet parse_equation_set(std::string_view text);
BinaryHalfAdder parse_binary_half_adder(std::string_view text);
BinaryFullAdder parse_binary_full_adder(std::string_view text);

/// Inputs a, b (trits). Outputs sum (trit), carry (binary-valued trit).
Netlist gen_ternary_half_adder();

/// Inputs a, b (trits), cin (binary-valued trit). Outputs sum, carry.
Netlist gen_ternary_full_adder(EquationSet eqs = EquationSet::corrected);

/// Inputs a, b (trits). Outputs sum (trit), carry (binary-valued trit).
/// Catalog costs reproduce the published total of 38; the principled count
/// includes the full decoder pair and the carry gate.
Netlist gen_ternary_mul1();

/// Inputs a, b. Outputs sum, carry.
Netlist gen_binary_half_adder(BinaryHalfAdder variant);

/// Inputs a, b, cin. Outputs sum, carry.
Netlist gen_binary_full_adder(BinaryFullAdder variant);

/// Inputs a, b. Output p = a AND b.
Netlist gen_binary_mul1();

/// Which adder circuit backs each block of a word-level generator.
struct BlockVariant {
  EquationSet eqs = EquationSet::corrected;
  BinaryHalfAdder binary_ha = BinaryHalfAdder::nand;
  BinaryFullAdder binary_fa = BinaryFullAdder::nand;
};

/// `width` full adders chained through binary-valued carries.
/// Inputs x0..x{w-1}, y0..y{w-1}, cin. Outputs s0..s{w-1}, cout.
Netlist gen_ripple_adder(int radix, int width, BlockVariant variant = {});

struct UnitCosts {
  long long mul1 = 0;
  long long ha = 0;
  long long fa = 0;
};

/// Transistor counts of the one-digit blocks used by the word generators.
UnitCosts unit_costs(int radix, CostMode mode, BlockVariant variant = {});

struct BlockCounts {
  int radix = 2;
  BlockVariant variant;
  int mul1 = 0;
  int ha = 0;
  int fa = 0;
  int stage_count = 0;

  /// mul1 * c_mul1 + ha * c_ha + fa * c_fa with this radix's unit costs.
  long long transistor_total(CostMode mode) const;
};

struct WallaceMultiplier {
  Netlist netlist;
  /// Column weight (power of the radix) of each netlist output.
  std::vector<int> output_columns;
  BlockCounts tree;
  BlockCounts with_cpa;
};

/// width x width multiplier: width^2 one-digit multipliers, a Wallace
/// reduction to two rows, and a ripple carry-propagate adder.
/// Inputs x0..x{w-1}, y0..y{w-1}.
WallaceMultiplier gen_wallace_multiplier(int radix, int width, BlockVariant variant = {});

/// Published block tallies for the two multipliers the comparison uses.
struct WallaceTarget {
  int tree_fa;
  int tree_ha;
  int total_fa;
  int total_ha;
  int stages;
};

/// Known for (2, 8) and (3, 5); nullopt otherwise.
std::optional<WallaceTarget> published_wallace_counts(int radix, int width);

}  // namespace mvl
