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

#include "mvl/catalog.hpp"
#include "mvl/circuits.hpp"
#include "mvl/core.hpp"

#include <gtest/gtest.h>

#include <set>
#include <tuple>

namespace mvl {
namespace {

using Inputs = std::vector<int>;

// Truth tables written from arithmetic, independent of the core oracles.
void expect_adds(const Netlist& n, int radix, bool with_cin) {
  const auto table = exhaustive_table(n);
  const std::size_t arity = with_cin ? 3 : 2;
  const std::size_t expected_rows = static_cast<std::size_t>(radix * radix * (with_cin ? 2 : 1));
  ASSERT_EQ(table.rows.size(), expected_rows);
  for (const auto& row : table.rows) {
    ASSERT_EQ(row.inputs.size(), arity);
    int total = row.inputs[0] + row.inputs[1] + (with_cin ? row.inputs[2] : 0);
    EXPECT_EQ(row.outputs, (Inputs{total % radix, total / radix}))
        << row.inputs[0] << row.inputs[1] << (with_cin ? row.inputs[2] : 0);
  }
}

TEST(TernaryHalfAdder, TruthAndCost) {
  const auto n = gen_ternary_half_adder();
  expect_adds(n, 3, false);
  EXPECT_EQ(transistor_count(n, CostMode::catalog), 66);
  EXPECT_EQ(transistor_count(n, CostMode::principled), 66);
}

TEST(TernaryFullAdder, CorrectedTruthAndCosts) {
  const auto n = gen_ternary_full_adder(EquationSet::corrected);
  expect_adds(n, 3, true);
  EXPECT_EQ(transistor_count(n, CostMode::principled), 116);
  EXPECT_EQ(transistor_count(n, CostMode::catalog), 124);
}

TEST(TernaryFullAdder, PrintedCosts) {
  const auto n = gen_ternary_full_adder(EquationSet::printed);
  EXPECT_EQ(transistor_count(n, CostMode::catalog), 124);
  EXPECT_EQ(transistor_count(n, CostMode::principled), 124);
}

// The printed Sum11 / Cm1 forms evaluated directly on threshold flags.
TEST(TernaryFullAdder, PrintedFailuresMatchDirectEvaluation) {
  std::set<std::tuple<int, int, int, int>> expected;  // a, b, cin, output index
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const bool A0 = a >= 1, A1 = a >= 2, B0 = b >= 1, B1 = b >= 2;
      const bool sum11 = (!A0 && !B0) || (!A1 && A0 && B1) || (A1 && !B1) || (A1 && !B1 && B0);
      const bool cm1 = A1 || B1 || (!A1 && A0) || (!B1 && B0);
      const bool truly_carry = a + b + 1 >= 3;
      // With cin = 1 the sum is 1 iff sum11, unless sum21 (== sum10) already
      // wins the encoder's priority.
      const bool sum21 = (a + b) % 3 == 1;
      const int produced_sum = sum21 ? 2 : (sum11 ? 1 : 0);
      if (produced_sum != (a + b + 1) % 3) expected.insert({a, b, 1, 0});
      if (cm1 != truly_carry) expected.insert({a, b, 1, 1});
    }
  }
  ASSERT_EQ(expected, (std::set<std::tuple<int, int, int, int>>{
                          {2, 0, 1, 0}, {1, 0, 1, 1}, {0, 1, 1, 1}}));

  std::set<std::tuple<int, int, int, int>> actual;
  for (const auto& row : exhaustive_table(gen_ternary_full_adder(EquationSet::printed)).rows) {
    const int total = row.inputs[0] + row.inputs[1] + row.inputs[2];
    if (row.outputs[0] != total % 3) actual.insert({row.inputs[0], row.inputs[1], row.inputs[2], 0});
    if (row.outputs[1] != total / 3) actual.insert({row.inputs[0], row.inputs[1], row.inputs[2], 1});
  }
  EXPECT_EQ(actual, expected);
}

TEST(TernaryMultiplier, TruthAndCosts) {
  const auto n = gen_ternary_mul1();
  const auto table = exhaustive_table(n);
  ASSERT_EQ(table.rows.size(), 9u);
  for (const auto& row : table.rows) {
    const int p = row.inputs[0] * row.inputs[1];
    EXPECT_EQ(row.outputs, (Inputs{p % 3, p / 3}));
  }
  EXPECT_EQ(transistor_count(n, CostMode::catalog), 38);
  // Two decoders, S1 and S2 at six literals each, the A1*B1 carry gate and
  // the two encoders.
  EXPECT_EQ(transistor_count(n, CostMode::principled), 16 + 12 + 12 + 4 + 6 + 4);
}

TEST(BinaryHalfAdder, Variants) {
  const auto nand = gen_binary_half_adder(BinaryHalfAdder::nand);
  const auto x = gen_binary_half_adder(BinaryHalfAdder::xor3t);
  expect_adds(nand, 2, false);
  expect_adds(x, 2, false);
  EXPECT_EQ(transistor_count(nand, CostMode::catalog), 18);
  EXPECT_EQ(transistor_count(x, CostMode::catalog), 9);
}

TEST(BinaryFullAdder, Variants) {
  const std::vector<std::pair<BinaryFullAdder, long long>> cases = {
      {BinaryFullAdder::nand, 36}, {BinaryFullAdder::xor3t, 18}, {BinaryFullAdder::pass8t, 8}};
  for (auto [variant, cost] : cases) {
    const auto n = gen_binary_full_adder(variant);
    expect_adds(n, 2, true);
    EXPECT_EQ(transistor_count(n, CostMode::catalog), cost);
  }
  const auto nand = gen_binary_full_adder(BinaryFullAdder::nand);
  EXPECT_EQ(nand.gates().size(), 9u);
  EXPECT_EQ(depth(nand), 6);
}

TEST(BinaryMultiplier, AndGate) {
  const auto n = gen_binary_mul1();
  EXPECT_EQ(transistor_count(n, CostMode::catalog), 6);
  EXPECT_EQ(evaluate(n, Inputs{1, 1}), Inputs{1});
  EXPECT_EQ(evaluate(n, Inputs{1, 0}), Inputs{0});
  EXPECT_NEAR(38.0 / 6.0, 6.33, 0.01);
}

TEST(Ratios, PublishedOneDigitRatios) {
  const auto cost = [](const Netlist& n) {
    return static_cast<double>(transistor_count(n, CostMode::catalog));
  };
  const double t_ha = cost(gen_ternary_half_adder());
  const double t_fa = cost(gen_ternary_full_adder(EquationSet::printed));
  EXPECT_NEAR(t_ha / cost(gen_binary_half_adder(BinaryHalfAdder::nand)), 3.67, 0.01);
  EXPECT_NEAR(t_ha / cost(gen_binary_half_adder(BinaryHalfAdder::xor3t)), 7.33, 0.05);
  EXPECT_NEAR(t_fa / cost(gen_binary_full_adder(BinaryFullAdder::nand)), 3.44, 0.01);
  EXPECT_NEAR(t_fa / cost(gen_binary_full_adder(BinaryFullAdder::xor3t)), 6.89, 0.01);
  EXPECT_DOUBLE_EQ(t_fa / cost(gen_binary_full_adder(BinaryFullAdder::pass8t)), 15.5);
}

TEST(RippleAdder, WordExample) {
  const auto n = gen_ripple_adder(3, 5);
  // 16 = 121 (base 3), 17 = 122; digits are little-endian, then cin.
  const auto out = evaluate(n, Inputs{1, 2, 1, 0, 0, 2, 2, 1, 0, 0, 0});
  EXPECT_EQ(out, (Inputs{0, 2, 0, 1, 0, 0}));  // 33 = 1020, carry 0
}

TEST(RippleAdder, CompositionCosts) {
  EXPECT_EQ(transistor_count(gen_ripple_adder(3, 41), CostMode::catalog), 41 * 124);
  EXPECT_EQ(transistor_count(gen_ripple_adder(2, 64), CostMode::catalog), 64 * 36);
  EXPECT_EQ(transistor_count(gen_ripple_adder(3, 41), CostMode::principled), 41 * 116);
}

TEST(RippleAdder, ExhaustiveSmallWidths) {
  for (int radix : {2, 3}) {
    for (int width = 1; width <= 3; ++width) {
      const auto n = gen_ripple_adder(radix, width);
      const auto table = exhaustive_table(n);
      for (const auto& row : table.rows) {
        long long x = 0, y = 0, s = 0, scale = 1;
        for (int i = 0; i < width; ++i) {
          x += row.inputs[static_cast<std::size_t>(i)] * scale;
          y += row.inputs[static_cast<std::size_t>(width + i)] * scale;
          s += row.outputs[static_cast<std::size_t>(i)] * scale;
          scale *= radix;
        }
        s += row.outputs.back() * scale;
        EXPECT_EQ(s, x + y + row.inputs.back());
      }
    }
  }
}

TEST(RippleAdder, RejectsZeroWidth) {
  EXPECT_THROW(gen_ripple_adder(3, 0), std::invalid_argument);
}

TEST(Parsing, NamesRoundTrip) {
  for (auto e : {EquationSet::printed, EquationSet::corrected}) {
    EXPECT_EQ(parse_equation_set(to_string(e)), e);
  }
  for (auto v : {BinaryFullAdder::nand, BinaryFullAdder::xor3t, BinaryFullAdder::pass8t}) {
    EXPECT_EQ(parse_binary_full_adder(to_string(v)), v);
  }
  EXPECT_THROW(parse_equation_set("typo"), std::invalid_argument);
}

// ---- catalog ----

int cost_of(StyleName s, CatalogGate g, int n = 2) {
  return style_gate_cost(design_style(s), {g, n}).count;
}

TEST(Catalog, Inverters) {
  EXPECT_EQ(cost_of(StyleName::navi, CatalogGate::inverter), 8);
  EXPECT_EQ(cost_of(StyleName::lin, CatalogGate::inverter), 6);
  EXPECT_EQ(cost_of(StyleName::nepal, CatalogGate::inverter), 3);
  EXPECT_EQ(cost_of(StyleName::binary, CatalogGate::inverter), 2);
  EXPECT_EQ(cost_of(StyleName::quaternary, CatalogGate::inverter), 10);
}

TEST(Catalog, NandFormulasAndPublishedTwoInputRow) {
  EXPECT_EQ(design_style(StyleName::navi).nand_formula->describe(), "6N");
  EXPECT_EQ(design_style(StyleName::lin).nand_formula->describe(), "4N+2");
  EXPECT_EQ(design_style(StyleName::nepal).nand_formula->describe(), "2N+1");
  EXPECT_EQ(design_style(StyleName::binary).nand_formula->describe(), "2N");
  EXPECT_EQ(design_style(StyleName::navi).nand2_published, 16);
  EXPECT_EQ(cost_of(StyleName::navi, CatalogGate::nand), 12);
  for (auto s : {StyleName::lin, StyleName::nepal, StyleName::binary}) {
    EXPECT_EQ(cost_of(s, CatalogGate::nand), design_style(s).nand2_published);
  }
  EXPECT_EQ(cost_of(StyleName::lin, CatalogGate::nand, 4), 18);
  EXPECT_EQ(cost_of(StyleName::binary, CatalogGate::nor, 3), 6);
}

TEST(Catalog, StorageCells) {
  EXPECT_EQ(cost_of(StyleName::navi, CatalogGate::dff), 40);
  EXPECT_EQ(cost_of(StyleName::lin, CatalogGate::dff), 32);
  EXPECT_EQ(cost_of(StyleName::nepal, CatalogGate::dff), 20);
  EXPECT_EQ(cost_of(StyleName::binary, CatalogGate::dff), 16);
  EXPECT_EQ(cost_of(StyleName::lin, CatalogGate::sram_cell), 14);
  EXPECT_EQ(cost_of(StyleName::nepal, CatalogGate::sram_cell), 8);
  EXPECT_EQ(cost_of(StyleName::binary, CatalogGate::sram_cell), 6);
  const auto navi = style_gate_cost(design_style(StyleName::navi), {CatalogGate::sram_cell});
  EXPECT_TRUE(navi.extrapolated);
  EXPECT_FALSE(style_gate_cost(design_style(StyleName::lin), {CatalogGate::sram_cell}).extrapolated);
}

TEST(Catalog, QuaternaryOnlyHasAnInverter) {
  EXPECT_THROW(cost_of(StyleName::quaternary, CatalogGate::nand), std::out_of_range);
  EXPECT_THROW(cost_of(StyleName::quaternary, CatalogGate::dff), std::out_of_range);
}

TEST(Catalog, Annotations) {
  EXPECT_FALSE(design_style(StyleName::navi).static_current);
  EXPECT_TRUE(design_style(StyleName::nepal).static_current);
  EXPECT_EQ(design_style(StyleName::binary).supplies, 1);
  EXPECT_EQ(style_catalog().size(), 5u);
  EXPECT_THROW(parse_style("tsmc"), std::invalid_argument);
}

}  // namespace
}  // namespace mvl
