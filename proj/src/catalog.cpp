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

#include <fmt/format.h>

#include <array>
#include <stdexcept>

namespace mvl {

namespace {

constexpr std::array<DesignStyle, 5> kStyles{{
    {StyleName::navi, 3, 8, LinearFormula{6, 0}, 16, 2, false,
     "middle level from an additional Vdd/2 supply"},
    {StyleName::lin, 3, 6, LinearFormula{4, 2}, 10, 1, true,
     "middle level from a resistive divider; static current"},
    {StyleName::nepal, 3, 3, LinearFormula{2, 1}, 5, 2, true,
     "always-on transistor plus Vdd/2 supply; static current"},
    {StyleName::binary, 2, 2, LinearFormula{2, 0}, 4, 1, false, "static CMOS"},
    {StyleName::quaternary, 4, 10, std::nullopt, std::nullopt, 3, false,
     "4-valued inverter; Vdd/3 and 2Vdd/3 supplies"},
}};

}  // namespace

std::string_view to_string(StyleName name) {
  switch (name) {
    case StyleName::navi: return "navi";
    case StyleName::lin: return "lin";
    case StyleName::nepal: return "nepal";
    case StyleName::binary: return "binary";
    case StyleName::quaternary: return "quaternary";
  }
  return "?";
}

StyleName parse_style(std::string_view text) {
  for (const auto& s : kStyles) {
    if (to_string(s.name) == text) return s.name;
  }
  throw std::invalid_argument(fmt::format("unknown design style '{}'", text));
}

std::string LinearFormula::describe() const {
  if (intercept == 0) return fmt::format("{}N", slope);
  return fmt::format("{}N+{}", slope, intercept);
}

std::span<const DesignStyle> style_catalog() { return kStyles; }

const DesignStyle& design_style(StyleName name) {
  for (const auto& s : kStyles) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("style missing from catalog");
}

std::string_view to_string(CatalogGate gate) {
  switch (gate) {
    case CatalogGate::inverter: return "inverter";
    case CatalogGate::nand: return "nand";
    case CatalogGate::nor: return "nor";
    case CatalogGate::dff: return "dff";
    case CatalogGate::sram_cell: return "sram";
  }
  return "?";
}

CatalogGate parse_catalog_gate(std::string_view text) {
  for (auto g : {CatalogGate::inverter, CatalogGate::nand, CatalogGate::nor, CatalogGate::dff,
                 CatalogGate::sram_cell}) {
    if (to_string(g) == text) return g;
  }
  throw std::invalid_argument(fmt::format("unknown catalog gate '{}'", text));
}

StyleCost style_gate_cost(const DesignStyle& style, CatalogQuery query) {
  if (style.name == StyleName::quaternary && query.gate != CatalogGate::inverter) {
    throw std::out_of_range(
        fmt::format("no {} entry for the quaternary style", to_string(query.gate)));
  }
  switch (query.gate) {
    case CatalogGate::inverter:
      return {style.inverter_cost, false, {}};
    case CatalogGate::nand:
    case CatalogGate::nor: {
      if (query.inputs < 2) {
        throw std::out_of_range(fmt::format("fan-in {} is below 2", query.inputs));
      }
      StyleCost cost{style.nand_formula->at(query.inputs), false, {}};
      if (query.inputs == 2 && style.nand2_published &&
          *style.nand2_published != cost.count) {
        cost.note = fmt::format("published 2-input count is {}", *style.nand2_published);
      }
      return cost;
    }
    case CatalogGate::dff:
      return {4 * style.inverter_cost + 8, false, {}};
    case CatalogGate::sram_cell: {
      StyleCost cost{2 * style.inverter_cost + 2, false, {}};
      if (style.name == StyleName::navi) {
        cost.extrapolated = true;
        cost.note = "extrapolated; no published value";
      }
      return cost;
    }
  }
  throw std::out_of_range("unknown catalog gate");
}

}  // namespace mvl
