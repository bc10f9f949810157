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

#include "mvl/compare.hpp"

#include "mvl/catalog.hpp"
#include "mvl/circuits.hpp"
#include "mvl/core.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace mvl {

std::string_view to_string(ReportSubject subject) {
  switch (subject) {
    case ReportSubject::inverter: return "inverter";
    case ReportSubject::nand: return "nand";
    case ReportSubject::ha: return "ha";
    case ReportSubject::fa: return "fa";
    case ReportSubject::mul1: return "mul1";
    case ReportSubject::dff: return "dff";
    case ReportSubject::sram: return "sram";
    case ReportSubject::adder_word: return "adder_word";
    case ReportSubject::multiplier_word: return "multiplier_word";
  }
  return "?";
}

ReportSubject parse_report_subject(std::string_view text) {
  std::string key(text);
  for (auto& c : key) {
    if (c == '-') c = '_';
  }
  for (auto s : {ReportSubject::inverter, ReportSubject::nand, ReportSubject::ha,
                 ReportSubject::fa, ReportSubject::mul1, ReportSubject::dff, ReportSubject::sram,
                 ReportSubject::adder_word, ReportSubject::multiplier_word}) {
    if (to_string(s) == key) return s;
  }
  throw std::invalid_argument(fmt::format("unknown comparison subject '{}'", text));
}

namespace {

ReportRow make_row(std::string label, long long ternary, long long binary, double info,
                   std::string note = {}) {
  ReportRow row;
  row.label = std::move(label);
  row.ternary_count = ternary;
  row.binary_count = binary;
  row.ratio = static_cast<double>(ternary) / static_cast<double>(binary);
  row.information_ratio = info;
  row.viable = row.ratio <= info;
  row.note = std::move(note);
  return row;
}

constexpr StyleName kTernaryStyles[] = {StyleName::navi, StyleName::lin, StyleName::nepal};

void style_rows(ComparisonReport& report, CatalogQuery query) {
  const double info = information_ratio(3, 2);
  const auto& bin = design_style(StyleName::binary);
  for (auto name : kTernaryStyles) {
    const auto& style = design_style(name);
    auto t = style_gate_cost(style, query);
    auto b = style_gate_cost(bin, query);
    long long tcount = t.count;
    long long bcount = b.count;
    std::string note = t.note;
    if ((query.gate == CatalogGate::nand || query.gate == CatalogGate::nor) && query.inputs == 2) {
      // Two-input rows report the tabulated counts.
      tcount = style.nand2_published.value_or(t.count);
      bcount = bin.nand2_published.value_or(b.count);
      note = tcount != t.count ? fmt::format("formula {} gives {}",
                                             style.nand_formula->describe(), t.count)
                               : std::string{};
    }
    report.rows.push_back(make_row(std::string(to_string(name)), tcount, bcount, info, note));
  }
}

// Ternary digits carry log2(3) bits each; a T-trit word against a B-bit word
// carries T * ln 3 / (B * ln 2) times the information.
double word_information(int trits, int bits) {
  return trits * std::log(3.0) / (bits * std::log(2.0));
}

}  // namespace

ComparisonReport comparison_report(ReportSubject subject, const ReportOptions& options) {
  ComparisonReport report{subject, {}};
  const double info = information_ratio(3, 2);
  const auto cat = CostMode::catalog;
  switch (subject) {
    case ReportSubject::inverter: {
      style_rows(report, {CatalogGate::inverter, 2});
      const auto& quad = design_style(StyleName::quaternary);
      report.rows.push_back(make_row("quaternary", quad.inverter_cost,
                                     2 * design_style(StyleName::binary).inverter_cost,
                                     information_ratio(4, 2), "against two binary inverters"));
      break;
    }
    case ReportSubject::nand:
      style_rows(report, {CatalogGate::nand, options.fan_in});
      break;
    case ReportSubject::dff:
      style_rows(report, {CatalogGate::dff, 2});
      break;
    case ReportSubject::sram:
      style_rows(report, {CatalogGate::sram_cell, 2});
      break;
    case ReportSubject::ha: {
      const auto t = transistor_count(gen_ternary_half_adder(), cat);
      report.rows.push_back(make_row(
          "3-HA vs 2-HA nand", t, transistor_count(gen_binary_half_adder(BinaryHalfAdder::nand), cat),
          info));
      report.rows.push_back(make_row(
          "3-HA vs 2-HA xor", t, transistor_count(gen_binary_half_adder(BinaryHalfAdder::xor3t), cat),
          info));
      break;
    }
    case ReportSubject::fa: {
      const auto t = transistor_count(gen_ternary_full_adder(EquationSet::printed), cat);
      for (auto v : {BinaryFullAdder::nand, BinaryFullAdder::xor3t, BinaryFullAdder::pass8t}) {
        report.rows.push_back(make_row(fmt::format("3-FA vs 2-FA {}", to_string(v)), t,
                                       transistor_count(gen_binary_full_adder(v), cat), info));
      }
      const auto corrected =
          transistor_count(gen_ternary_full_adder(EquationSet::corrected), CostMode::principled);
      report.rows.push_back(make_row(
          "3-FA corrected vs 2-FA nand", corrected,
          transistor_count(gen_binary_full_adder(BinaryFullAdder::nand), cat), info,
          "corrected equations, principled count"));
      break;
    }
    case ReportSubject::mul1:
      report.rows.push_back(make_row("3-mul1 vs 2-mul1",
                                     transistor_count(gen_ternary_mul1(), cat),
                                     transistor_count(gen_binary_mul1(), cat), info));
      break;
    case ReportSubject::adder_word: {
      const int bits = options.bits.value_or(64);
      const int trits = options.trits.value_or(digits_for_bits(bits, WirePolicy::published_table));
      const auto t_fa = transistor_count(gen_ternary_full_adder(EquationSet::printed), cat);
      for (auto v : {BinaryFullAdder::nand, BinaryFullAdder::xor3t, BinaryFullAdder::pass8t}) {
        const auto b_fa = transistor_count(gen_binary_full_adder(v), cat);
        report.rows.push_back(make_row(
            fmt::format("{}-trit vs {}-bit ripple ({})", trits, bits, to_string(v)),
            trits * t_fa, bits * b_fa, word_information(trits, bits),
            fmt::format("{} x {} vs {} x {}", trits, t_fa, bits, b_fa)));
      }
      break;
    }
    case ReportSubject::multiplier_word: {
      const int bits = options.bits.value_or(8);
      const int trits = options.trits.value_or(digits_for_bits(bits, WirePolicy::published_table));
      const double word_info = word_information(trits, bits);
      BlockVariant printed;
      printed.eqs = EquationSet::printed;
      const auto tu = unit_costs(3, cat, printed);
      const auto bu = unit_costs(2, cat, printed);

      const auto t_gen = gen_wallace_multiplier(3, trits, printed).with_cpa;
      const auto b_gen = gen_wallace_multiplier(2, bits, printed).with_cpa;
      const auto t_pub = published_wallace_counts(3, trits);
      const auto b_pub = published_wallace_counts(2, bits);
      const bool published = t_pub && b_pub;
      const long long t_ha = published ? t_pub->total_ha : t_gen.ha;
      const long long t_fa = published ? t_pub->total_fa : t_gen.fa;
      const long long b_ha = published ? b_pub->total_ha : b_gen.ha;
      const long long b_fa = published ? b_pub->total_fa : b_gen.fa;
      const std::string source = published ? "published block counts" : "scheduler block counts";

      const long long t_mul = static_cast<long long>(trits) * trits;
      const long long b_mul = static_cast<long long>(bits) * bits;
      report.rows.push_back(make_row("unit 1-digit multiplier", tu.mul1, bu.mul1, info));
      report.rows.push_back(make_row("unit half adder", tu.ha, bu.ha, info));
      report.rows.push_back(make_row("unit full adder", tu.fa, bu.fa, info));
      report.rows.push_back(make_row("sum 1-digit multipliers", t_mul * tu.mul1, b_mul * bu.mul1,
                                     word_info, fmt::format("{} vs {} blocks", t_mul, b_mul)));
      report.rows.push_back(make_row("sum half adders", t_ha * tu.ha, b_ha * bu.ha, word_info,
                                     fmt::format("{} vs {} blocks; {}", t_ha, b_ha, source)));
      report.rows.push_back(make_row("sum full adders", t_fa * tu.fa, b_fa * bu.fa, word_info,
                                     fmt::format("{} vs {} blocks; {}", t_fa, b_fa, source)));
      report.rows.push_back(make_row(
          "total", t_mul * tu.mul1 + t_ha * tu.ha + t_fa * tu.fa,
          b_mul * bu.mul1 + b_ha * bu.ha + b_fa * bu.fa, word_info, source));
      report.rows.push_back(make_row(
          "total (scheduler)", t_gen.transistor_total(cat), b_gen.transistor_total(cat), word_info,
          fmt::format("ternary {} FA / {} HA, binary {} FA / {} HA", t_gen.fa, t_gen.ha, b_gen.fa,
                      b_gen.ha)));
      break;
    }
  }
  return report;
}

}  // namespace mvl
