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

// Per-design-style transistor counts for the basic ternary gates and the
// storage cells derived from them. Three published CNTFET ternary styles are
// carried alongside plain binary CMOS and the 4-valued inverter.

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mvl {

enum class StyleName { navi, lin, nepal, binary, quaternary };

std::string_view to_string(StyleName name);
/// Throws std::invalid_argument on an unknown name.
StyleName parse_style(std::string_view text);

/// count(n) = slope * n + intercept.
struct LinearFormula {
  int slope;
  int intercept;

  int at(int n) const noexcept { return slope * n + intercept; }
  std::string describe() const;
};

struct DesignStyle {
  StyleName name;
  int radix;
  int inverter_cost;
  std::optional<LinearFormula> nand_formula;
  /// The published 2-input NAND count, where it is tabulated.
  std::optional<int> nand2_published;
  /// Power supplies needed, counting Vdd.
  int supplies;
  /// True when the middle level is produced through a dc current path.
  bool static_current;
  std::string_view notes;
};

/// All styles in catalog order: navi, lin, nepal, binary, quaternary.
std::span<const DesignStyle> style_catalog();
const DesignStyle& design_style(StyleName name);

enum class CatalogGate { inverter, nand, nor, dff, sram_cell };

std::string_view to_string(CatalogGate gate);
CatalogGate parse_catalog_gate(std::string_view text);

struct CatalogQuery {
  CatalogGate gate = CatalogGate::inverter;
  /// Fan-in for nand/nor.
  int inputs = 2;
};

struct StyleCost {
  int count = 0;
  /// Set when the value is produced by a formula the published tables do not
  /// cover for this style.
  bool extrapolated = false;
  std::string note;
};

/// inverter -> inverter_cost; nand/nor -> formula(n); dff -> 4 * inverter + 8
/// (four inverters, four transmission gates); sram_cell -> 2 * inverter + 2
/// (cross-coupled pair plus two access transistors).
///
/// Throws std::out_of_range when the style has no entry for the gate.
StyleCost style_gate_cost(const DesignStyle& style, CatalogQuery query);

}  // namespace mvl
