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
#include "mvl/core.hpp"
#include "mvl/verify.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <stdexcept>

namespace mvl {

namespace {

VerificationResult only_output(VerificationResult result, std::size_t output) {
  std::erase_if(result.counterexamples, [&](const Counterexample& ce) {
    return std::find(ce.mismatched_outputs.begin(), ce.mismatched_outputs.end(), output) ==
           ce.mismatched_outputs.end();
  });
  result.failures = result.counterexamples.size();
  result.pass = result.failures == 0;
  return result;
}

std::string list_inputs(const VerificationResult& r) {
  std::string text;
  for (const auto& ce : r.counterexamples) {
    if (!text.empty()) text += ", ";
    text += fmt::format("({})", fmt::join(ce.inputs, ","));
  }
  return text;
}

bool inputs_are(const VerificationResult& r, std::vector<std::vector<int>> expected) {
  std::vector<std::vector<int>> got;
  for (const auto& ce : r.counterexamples) got.push_back(ce.inputs);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

std::uint32_t signal_named(const Netlist& n, std::string_view name) {
  for (std::size_t i = 0; i < n.signals().size(); ++i) {
    if (n.signals()[i].name == name) return static_cast<std::uint32_t>(i);
  }
  throw std::logic_error(fmt::format("no signal named '{}'", name));
}

// Number of input tuples for which both active-low encoder inputs are low.
int both_encoder_inputs_low(const Netlist& n) {
  const auto s1 = signal_named(n, "sum1_bar");
  const auto s2 = signal_named(n, "sum2_bar");
  std::vector<int> card;
  for (const auto& s : n.inputs()) card.push_back(domain_cardinality(s.domain));
  std::vector<std::uint8_t> scratch(n.signals().size());
  std::vector<int> out(n.outputs().size());
  int hits = 0;
  for_each_assignment(card, [&](std::span<const int> in) {
    n.evaluate(in, scratch, out);
    if (scratch[s1] == 0 && scratch[s2] == 0) ++hits;
  });
  return hits;
}

}  // namespace

std::vector<ErrataEntry> errata_report() {
  std::vector<ErrataEntry> entries;

  const auto printed_fa = gen_ternary_full_adder(EquationSet::printed);
  const auto corrected_fa = gen_ternary_full_adder(EquationSet::corrected);
  const auto printed = verify_exhaustive(printed_fa, full_adder_oracle(3), "t-fa-printed");
  const bool corrected_ok =
      verify_exhaustive(corrected_fa, full_adder_oracle(3), "t-fa-corrected").pass;

  {
    auto sum = only_output(printed, 0);
    ErrataEntry e;
    e.id = "sum11-overcount";
    e.location = "ternary full adder equations, Sum11 (cin = 1, sum == 1)";
    e.printed_claim = "Sum11 = !A0.!B0 + !A1.A0.B1 + A1.!B1 + A1.!B1.B0";
    e.computed_fact = fmt::format(
        "term A1.!B1 also fires at (a,b) = (2,0), so the sum is wrong at (a,b,cin) = {}; "
        "Sum11 = !A0.!B0 + !A1.A0.B1 + A1.!B1.B0 is exact",
        list_inputs(sum));
    e.confirmed = corrected_ok && inputs_are(sum, {{2, 0, 1}});
    e.evidence = std::move(sum);
    entries.push_back(std::move(e));
  }
  {
    auto carry = only_output(printed, 1);
    ErrataEntry e;
    e.id = "cm1-false-carry";
    e.location = "ternary full adder equations, Cm1 (cin = 1 carry)";
    e.printed_claim = "Cm1 = A1 + B1 + !A1.A0 + !B1.B0";
    e.computed_fact = fmt::format(
        "terms !A1.A0 and !B1.B0 assert a carry when a + b = 1, wrong at (a,b,cin) = {}; "
        "Cm1 = A1 + B1 + A0.B0 is exact",
        list_inputs(carry));
    e.confirmed = corrected_ok && inputs_are(carry, {{1, 0, 1}, {0, 1, 1}});
    e.evidence = std::move(carry);
    entries.push_back(std::move(e));
  }
  {
    const auto mul1 = gen_ternary_mul1();
    const auto ha = gen_ternary_half_adder();
    auto decoder_cost = [](const Netlist& n) {
      int total = 0;
      for (const auto& g : n.gates()) {
        if (g.kind == GateKind::decoder) total += principled_cost(g);
      }
      return total;
    };
    const int computed = decoder_cost(mul1);
    ErrataEntry e;
    e.id = "mul1-decoder-price";
    e.location = "one-trit multiplier transistor total, decoder term";
    e.printed_claim = "4 (decoder) + 12 (S1) + 12 (S2) + 6 (s encoder) + 4 (cout encoder) = 38";
    e.computed_fact = fmt::format(
        "the half adder prices its two decoders at {}, the same pair costs {} here; "
        "with it and the A1.B1 carry gate the multiplier totals {} transistors",
        decoder_cost(ha), computed, transistor_count(mul1, CostMode::principled));
    e.confirmed = computed == decoder_cost(ha) && computed != 4;
    e.evidence = NumericEvidence{4, static_cast<double>(computed)};
    entries.push_back(std::move(e));
  }
  {
    const int trits = digits_for_bits(8, WirePolicy::published_table);
    const auto reach = ipow(3, trits);
    const auto range = ipow(2, 8);
    ErrataEntry e;
    e.id = "trits-for-8-bits";
    e.location = "bit/trit wire-count table, 8-bit column";
    e.printed_claim = "8 bits -> 5 trits";
    e.computed_fact = fmt::format("3^{} = {} < 2^8 = {}; {} trits are needed to cover 8 bits",
                                  trits, reach.str(), range.str(),
                                  digits_for_bits(8, WirePolicy::capacity));
    e.confirmed = reach < range;
    e.evidence = NumericEvidence{static_cast<double>(reach), static_cast<double>(range)};
    entries.push_back(std::move(e));
  }
  {
    const auto& navi = design_style(StyleName::navi);
    const int table = navi.nand2_published.value_or(0);
    const int formula = navi.nand_formula->at(2);
    ErrataEntry e;
    e.id = "navi-nand2";
    e.location = "NAND transistor-count table, Navi 2-input entry";
    e.printed_claim = fmt::format("2-input count {} alongside an N-input count of {}", table,
                                  navi.nand_formula->describe());
    e.computed_fact = fmt::format("{} at N = 2 gives {}, not {}", navi.nand_formula->describe(),
                                  formula, table);
    e.confirmed = table != formula;
    e.evidence = NumericEvidence{static_cast<double>(table), static_cast<double>(formula)};
    entries.push_back(std::move(e));
  }
  {
    const int hits = both_encoder_inputs_low(gen_ternary_half_adder());
    ErrataEntry e;
    e.id = "encoder-unreachable-row";
    e.location = "binary-to-ternary encoder truth table, row (Sum1_bar, Sum2_bar) = (0, 0)";
    e.printed_claim = "(0, 0) -> 2";
    e.computed_fact = fmt::format(
        "Sum1 and Sum2 are one-hot; over all 9 half-adder inputs both are active {} times, "
        "so the row is unreachable (the encoder resolves it by giving 2 priority)",
        hits);
    e.confirmed = hits == 0;
    e.evidence = NumericEvidence{1, static_cast<double>(hits)};
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace mvl
