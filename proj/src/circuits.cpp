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

#include "mvl/circuits.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace mvl {

std::string_view to_string(EquationSet eqs) {
  return eqs == EquationSet::printed ? "printed" : "corrected";
}

std::string_view to_string(BinaryHalfAdder variant) {
  return variant == BinaryHalfAdder::nand ? "nand" : "xor";
}

std::string_view to_string(BinaryFullAdder variant) {
  switch (variant) {
    case BinaryFullAdder::nand: return "nand";
    case BinaryFullAdder::xor3t: return "xor";
    case BinaryFullAdder::pass8t: return "pass8t";
  }
  return "?";
}

EquationSet parse_equation_set(std::string_view text) {
  if (text == "printed") return EquationSet::printed;
  if (text == "corrected") return EquationSet::corrected;
  throw std::invalid_argument(fmt::format("unknown equation set '{}'", text));
}

BinaryHalfAdder parse_binary_half_adder(std::string_view text) {
  if (text == "nand") return BinaryHalfAdder::nand;
  if (text == "xor") return BinaryHalfAdder::xor3t;
  throw std::invalid_argument(fmt::format("unknown binary half adder variant '{}'", text));
}

BinaryFullAdder parse_binary_full_adder(std::string_view text) {
  if (text == "nand") return BinaryFullAdder::nand;
  if (text == "xor") return BinaryFullAdder::xor3t;
  if (text == "pass8t") return BinaryFullAdder::pass8t;
  throw std::invalid_argument(fmt::format("unknown binary full adder variant '{}'", text));
}

namespace {

using Terms = std::vector<std::vector<SignalRef>>;

// sum == 1 for a + b (mod 3): (0,1), (1,0), (2,2).
Terms sum_is_one(const DecodedRails& a, const DecodedRails& b) {
  return {{a.a0_bar, b.a1_bar, b.a0}, {a.a1_bar, a.a0, b.a0_bar}, {a.a1, b.a1}};
}

// sum == 2 for a + b (mod 3): (0,2), (1,1), (2,0).
Terms sum_is_two(const DecodedRails& a, const DecodedRails& b) {
  return {{a.a0_bar, b.a1}, {a.a1_bar, a.a0, b.a1_bar, b.a0}, {a.a1, b.a0_bar}};
}

// a + b >= 3.
Terms carry_out(const DecodedRails& a, const DecodedRails& b) {
  return {{b.a1, a.a0}, {a.a1, b.a0}};
}

}  // namespace

Netlist gen_ternary_half_adder() {
  NetlistBuilder nb(3);
  auto a = nb.input(SignalDomain::trit, "a");
  auto b = nb.input(SignalDomain::trit, "b");
  auto ra = nb.decoder(a, "dec_a");
  auto rb = nb.decoder(b, "dec_b");
  auto sum1_bar = nb.complex_sop(sum_is_one(ra, rb), true, "sum1_bar");
  auto sum2_bar = nb.complex_sop(sum_is_two(ra, rb), true, "sum2_bar");
  auto cm = nb.complex_sop(carry_out(ra, rb), false, "cm");
  nb.output(nb.sum_encoder(sum1_bar, sum2_bar, "sum_enc"), "sum");
  nb.output(nb.carry_encoder(cm, "carry_enc"), "carry");
  return std::move(nb).build();
}

Netlist gen_ternary_full_adder(EquationSet eqs) {
  NetlistBuilder nb(3);
  auto a = nb.input(SignalDomain::trit, "a");
  auto b = nb.input(SignalDomain::trit, "b");
  auto cin = nb.input(SignalDomain::binary_valued_trit, "cin");
  auto ra = nb.decoder(a, "dec_a");
  auto rb = nb.decoder(b, "dec_b");

  // cin = 0 half: the half-adder core. Sum21 (sum == 2 with cin = 1) is the
  // same function as Sum10, so it is shared.
  auto sum10 = nb.complex_sop(sum_is_one(ra, rb), false, "sum10");
  auto sum20 = nb.complex_sop(sum_is_two(ra, rb), false, "sum20");
  auto cm0 = nb.complex_sop(carry_out(ra, rb), false, "cm0");

  Terms sum11_terms;
  Terms cm1_terms;
  if (eqs == EquationSet::printed) {
    sum11_terms = {{ra.a0_bar, rb.a0_bar},
                   {ra.a1_bar, ra.a0, rb.a1},
                   {ra.a1, rb.a1_bar},
                   {ra.a1, rb.a1_bar, rb.a0}};
    cm1_terms = {{ra.a1}, {rb.a1}, {ra.a1_bar, ra.a0}, {rb.a1_bar, rb.a0}};
  } else {
    // a + b == 0 (mod 3): (0,0), (1,2), (2,1).
    sum11_terms = {{ra.a0_bar, rb.a0_bar}, {ra.a1_bar, ra.a0, rb.a1}, {ra.a1, rb.a1_bar, rb.a0}};
    // a + b >= 2.
    cm1_terms = {{ra.a1}, {rb.a1}, {ra.a0, rb.a0}};
  }
  auto sum11 = nb.complex_sop(std::move(sum11_terms), false, "sum11");
  auto cm1 = nb.complex_sop(std::move(cm1_terms), false, "cm1");
  if (eqs == EquationSet::corrected) {
    // Published gate prices for catalog mode.
    nb.set_cost_override(nb.gate_count() - 2, 20);
    nb.set_cost_override(nb.gate_count() - 1, 12);
  }

  auto cin_bar = nb.inverter(cin, "cin_bar");
  auto sum1_bar = nb.complex_sop({{cin_bar, sum10}, {cin, sum11}}, true, "sum1_bar");
  auto sum2_bar = nb.complex_sop({{cin_bar, sum20}, {cin, sum10}}, true, "sum2_bar");
  auto cm = nb.complex_sop({{cin_bar, cm0}, {cin, cm1}}, false, "cm");

  nb.output(nb.sum_encoder(sum1_bar, sum2_bar, "sum_enc"), "sum");
  nb.output(nb.carry_encoder(cm, "carry_enc"), "carry");
  return std::move(nb).build();
}

Netlist gen_ternary_mul1() {
  NetlistBuilder nb(3);
  auto a = nb.input(SignalDomain::trit, "a");
  auto b = nb.input(SignalDomain::trit, "b");
  auto ra = nb.decoder(a, "dec_a");
  // The published total prices the decoder pair at 4.
  nb.set_cost_override(nb.gate_count() - 1, 2);
  auto rb = nb.decoder(b, "dec_b");
  nb.set_cost_override(nb.gate_count() - 1, 2);
  // product == 1: (1,1), (2,2).
  auto s1_bar = nb.complex_sop({{ra.a1, rb.a1}, {rb.a1_bar, rb.a0, ra.a1_bar, ra.a0}}, true,
                               "s1_bar");
  // product == 2: (1,2), (2,1).
  auto s2_bar = nb.complex_sop({{ra.a1, rb.a1_bar, rb.a0}, {rb.a1, ra.a1_bar, ra.a0}}, true,
                               "s2_bar");
  auto cm = nb.complex_sop({{ra.a1, rb.a1}}, false, "cm");
  // Not itemized in the published total.
  nb.set_cost_override(nb.gate_count() - 1, 0);
  nb.output(nb.sum_encoder(s1_bar, s2_bar, "sum_enc"), "sum");
  nb.output(nb.carry_encoder(cm, "carry_enc"), "carry");
  return std::move(nb).build();
}

Netlist gen_binary_half_adder(BinaryHalfAdder variant) {
  NetlistBuilder nb(2);
  auto a = nb.input(SignalDomain::binary_rail, "a");
  auto b = nb.input(SignalDomain::binary_rail, "b");
  if (variant == BinaryHalfAdder::nand) {
    auto n1 = nb.nand({a, b}, "n1");
    auto n2 = nb.nand({a, n1}, "n2");
    auto n3 = nb.nand({b, n1}, "n3");
    nb.output(nb.nand({n2, n3}, "sum"), "sum");
    nb.output(nb.inverter(n1, "carry"), "carry");
  } else {
    nb.output(nb.xor3t(a, b, "sum"), "sum");
    nb.output(nb.and_gate(a, b, "carry"), "carry");
  }
  return std::move(nb).build();
}

Netlist gen_binary_full_adder(BinaryFullAdder variant) {
  NetlistBuilder nb(2);
  auto a = nb.input(SignalDomain::binary_rail, "a");
  auto b = nb.input(SignalDomain::binary_rail, "b");
  auto cin = nb.input(SignalDomain::binary_rail, "cin");
  switch (variant) {
    case BinaryFullAdder::nand: {
      // Two 4-NAND XOR stages; the carry reuses the first NAND of each.
      auto n1 = nb.nand({a, b}, "n1");
      auto n2 = nb.nand({a, n1}, "n2");
      auto n3 = nb.nand({b, n1}, "n3");
      auto x = nb.nand({n2, n3}, "x");
      auto n5 = nb.nand({x, cin}, "n5");
      auto n6 = nb.nand({x, n5}, "n6");
      auto n7 = nb.nand({cin, n5}, "n7");
      nb.output(nb.nand({n6, n7}, "sum"), "sum");
      nb.output(nb.nand({n1, n5}, "carry"), "carry");
      break;
    }
    case BinaryFullAdder::xor3t: {
      auto x = nb.xor3t(a, b, "x");
      nb.output(nb.xor3t(x, cin, "sum"), "sum");
      auto n1 = nb.nand({a, b}, "n1");
      auto n2 = nb.nand({x, cin}, "n2");
      nb.output(nb.nand({n1, n2}, "carry"), "carry");
      break;
    }
    case BinaryFullAdder::pass8t: {
      auto [sum, carry] = nb.pass_full_adder_8t(a, b, cin, "fa8t");
      nb.output(sum, "sum");
      nb.output(carry, "carry");
      break;
    }
  }
  return std::move(nb).build();
}

Netlist gen_binary_mul1() {
  NetlistBuilder nb(2);
  auto a = nb.input(SignalDomain::binary_rail, "a");
  auto b = nb.input(SignalDomain::binary_rail, "b");
  nb.output(nb.and_gate(a, b, "p"), "p");
  return std::move(nb).build();
}

namespace {

void check_word_radix(int radix) {
  if (radix != 2 && radix != 3) {
    throw std::invalid_argument(fmt::format("word generators support radix 2 or 3, got {}", radix));
  }
}

}  // namespace

Netlist gen_ripple_adder(int radix, int width, BlockVariant variant) {
  check_word_radix(radix);
  if (width < 1) throw std::invalid_argument(fmt::format("adder width {} is below 1", width));

  const Netlist fa = radix == 3 ? gen_ternary_full_adder(variant.eqs)
                                : gen_binary_full_adder(variant.binary_fa);
  const auto digit = radix == 3 ? SignalDomain::trit : SignalDomain::binary_rail;
  const auto carry_domain =
      radix == 3 ? SignalDomain::binary_valued_trit : SignalDomain::binary_rail;

  NetlistBuilder nb(radix);
  std::vector<SignalRef> xs;
  std::vector<SignalRef> ys;
  for (int i = 0; i < width; ++i) xs.push_back(nb.input(digit, fmt::format("x{}", i)));
  for (int i = 0; i < width; ++i) ys.push_back(nb.input(digit, fmt::format("y{}", i)));
  auto carry = nb.input(carry_domain, "cin");
  for (int i = 0; i < width; ++i) {
    const SignalRef bind[] = {xs[i], ys[i], carry};
    auto outs = nb.instantiate(fa, bind, fmt::format("fa{}", i));
    nb.output(outs[0], fmt::format("s{}", i));
    carry = outs[1];
  }
  nb.output(carry, "cout");
  return std::move(nb).build();
}

UnitCosts unit_costs(int radix, CostMode mode, BlockVariant variant) {
  check_word_radix(radix);
  if (radix == 3) {
    return {transistor_count(gen_ternary_mul1(), mode),
            transistor_count(gen_ternary_half_adder(), mode),
            transistor_count(gen_ternary_full_adder(variant.eqs), mode)};
  }
  return {transistor_count(gen_binary_mul1(), mode),
          transistor_count(gen_binary_half_adder(variant.binary_ha), mode),
          transistor_count(gen_binary_full_adder(variant.binary_fa), mode)};
}

long long BlockCounts::transistor_total(CostMode mode) const {
  const auto unit = unit_costs(radix, mode, variant);
  return mul1 * unit.mul1 + ha * unit.ha + fa * unit.fa;
}

}  // namespace mvl
